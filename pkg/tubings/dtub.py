"""Tubings of disconnected graphs, their trialgebra structure and the L-algebra on tubings.

A ``DTubing`` is an ordered list of components, each a tubing of a connected
graph flagged full or reduced. A reduced component stands for the tubing with
its universal tube removed; the flag keeps the operation loss-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
import logging
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from tubings.chains import Chain, boundary
from tubings.errors import InputError, PreconditionError
from tubings.graph import Graph, NodeSet, disjoint_union, edgeless, max_node, min_node, shift
from tubings.tubing import Tubing, enumerate_tubings, trivial_tubing
from tubings.types import CaseFailure, DTubOp

logger = logging.getLogger(__name__)


class Component(NamedTuple):
    tubing: Tubing
    reduced: bool

    @property
    def tubes(self) -> tuple[NodeSet, ...]:
        """The stored tubes: without the universal tube when reduced."""
        return self.tubing.proper_tubes if self.reduced else self.tubing.tubes

    def as_full(self) -> Component:
        return Component(self.tubing, False)

    def as_reduced(self) -> Component:
        return Component(self.tubing, True)


@dataclass(frozen=True)
class DTubing:
    """A tubing of the ordered disjoint union of its component graphs."""
    components: tuple[Component, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise InputError("A disconnected tubing needs at least one component")
        if len(self.components) == 1 and self.components[0].reduced:
            raise InputError("A single component cannot be reduced")
        if len(self.components) > 1 and not any(c.reduced for c in self.components):
            raise InputError("A tubing of a disconnected graph needs a reduced component")

    @property
    def graph(self) -> Graph:
        return disjoint_union([c.tubing.graph for c in self.components])

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    @property
    def tubes(self) -> tuple[NodeSet, ...]:
        """All stored tubes, offset into the disjoint union."""
        out: list[NodeSet] = []
        offset = 0
        for c in self.components:
            out.extend(shift(t, offset) for t in c.tubes)
            offset += c.tubing.graph.n
        return tuple(out)

    def flags(self) -> str:
        return "".join("R" if c.reduced else "F" for c in self.components)

    def sort_key(self) -> tuple:
        return tuple((c.reduced,) + c.tubing.sort_key() for c in self.components)

    def __repr__(self) -> str:
        parts = [f"{c.tubing.node_lists()}{'̄' if c.reduced else ''}" for c in self.components]
        return f"DTubing({' ⊔ '.join(parts)})"


def generator(T: Tubing) -> DTubing:
    """A tubing of a connected graph as a one-component element."""
    return DTubing((Component(T, False),))


class DChain(Chain[DTubing]):
    """Integer combination of disconnected tubings."""

    @staticmethod
    def order(key: DTubing) -> tuple:
        return key.sort_key()


Expression = Union[Tubing, "Product"]


class Product(NamedTuple):
    """``left op right`` with a generator on the left."""
    op: DTubOp
    left: Tubing
    right: Expression

    def __repr__(self) -> str:
        right = self.right.node_lists() if isinstance(self.right, Tubing) else repr(self.right)
        return f"({self.left.node_lists()} {self.op.symbol} {right})"


def def_count(T: DTubing) -> int:
    """Number of reduced components; 0 for a connected tubing."""
    return sum(1 for c in T.components if c.reduced)


def degree(T: DTubing) -> int:
    return sum(c.tubing.dimension for c in T.components) + max(0, def_count(T) - 1)


def _closed(T: DTubing) -> tuple[Component, ...]:
    return tuple(c.as_full() for c in T.components)


def _bar(T: DTubing) -> tuple[Component, ...]:
    """T̄ for a connected tubing, T itself otherwise."""
    if T.is_connected:
        return (T.components[0].as_reduced(),)
    return T.components


def _single(components: Sequence[Component]) -> DChain:
    return DChain.single(DTubing(tuple(components)))


def vdash(T: DTubing, S: DTubing) -> DChain:
    """T ⊢ S = T^c ⊔ S̄, zero when T has more than one reduced component."""
    if def_count(T) > 1:
        return DChain.zero()
    return _single(_closed(T) + _bar(S))


def dashv(T: DTubing, S: DTubing) -> DChain:
    """T ⊣ S = T̄ ⊔ S^c, zero when S has more than one reduced component."""
    if def_count(S) > 1:
        return DChain.zero()
    return _single(_bar(T) + _closed(S))


def times(T: DTubing, S: DTubing) -> DChain:
    return _single(_bar(T) + _bar(S))


OPERATIONS = {DTubOp.VDASH: vdash, DTubOp.DASHV: dashv, DTubOp.TIMES: times}


def apply_op(op: DTubOp, a: Union[DChain, DTubing], b: Union[DChain, DTubing]) -> DChain:
    """Bilinear extension of one of the three products."""
    a = DChain.single(a) if isinstance(a, DTubing) else a
    b = DChain.single(b) if isinstance(b, DTubing) else b
    f = OPERATIONS[op]
    out = []
    for x, ca in a:
        for y, cb in b:
            out.extend((z, ca * cb * cz) for z, cz in f(x, y))
    return DChain(out)


def _rest(components: Sequence[Component]) -> Union[Tubing, DTubing]:
    if len(components) == 1:
        return components[0].tubing
    return DTubing(tuple(components))


def split(T: DTubing) -> tuple[DTubOp, Tubing, Union[Tubing, DTubing]]:
    """First step of the canonical decomposition: T = c_1 op Rest."""
    if T.is_connected:
        raise PreconditionError(f"{T!r} is a generator and does not decompose")
    first, rest = T.components[0], list(T.components[1:])
    if not first.reduced:
        return DTubOp.VDASH, first.tubing, _rest(rest)
    if any(c.reduced for c in rest):
        return DTubOp.TIMES, first.tubing, _rest(rest)
    if len(rest) > 1:
        rest[-1] = rest[-1].as_reduced()
    return DTubOp.DASHV, first.tubing, _rest(rest)


def canonical_decompose(T: DTubing) -> Product:
    """Right-comb expression over connected tubings that evaluates to T."""
    op, left, rest = split(T)
    right = rest if isinstance(rest, Tubing) else canonical_decompose(rest)
    return Product(op, left, right)


def evaluate(expr: Expression) -> DTubing:
    if isinstance(expr, Tubing):
        return generator(expr)
    (result, _), = apply_op(expr.op, generator(expr.left), evaluate(expr.right)).terms
    return result


def _as_element(T: Union[Tubing, DTubing]) -> DTubing:
    return generator(T) if isinstance(T, Tubing) else T


def differential(T: DTubing) -> DChain:
    """The unique extension of ∂ obeying the Leibniz rules of the three products."""
    if T.is_connected:
        return DChain((generator(U), c) for U, c in boundary(T.components[0].tubing))
    op, left, rest = split(T)
    x = generator(left)
    y = _as_element(rest)
    dx = differential(x)
    dy = differential(y)
    sign = (-1) ** left.dimension
    if op is DTubOp.TIMES:
        return (apply_op(op, dx, y) - sign * apply_op(op, x, dy)
                + sign * (apply_op(DTubOp.DASHV, x, y) - apply_op(DTubOp.VDASH, x, y)))
    return apply_op(op, dx, y) + sign * apply_op(op, x, dy)


def differential_chain(c: DChain) -> DChain:
    return DChain(c.map_linear(differential))


def dchain_degree(c: DChain) -> int | None:
    """Common degree of the terms, None for the zero chain."""
    degrees = {degree(T) for T, _ in c}
    if len(degrees) > 1:
        raise InputError("Chain is not homogeneous")
    return degrees.pop() if degrees else None


def basis_label(T: DTubing) -> tuple[tuple[int, ...], tuple[Tubing, ...]]:
    """The reduced positions (1-based) and component tubings indexing T."""
    reduced = tuple(i for i, c in enumerate(T.components, start=1) if c.reduced)
    return reduced, tuple(c.tubing for c in T.components)


def basis_element(reduced: Sequence[int], tubings: Sequence[Tubing]) -> DTubing:
    """The element with the listed components reduced."""
    marked = set(reduced)
    return DTubing(tuple(Component(T, i in marked) for i, T in enumerate(tubings, start=1)))


def enumerate_dtubings(graphs: Sequence[Graph]) -> Iterator[DTubing]:
    """Every valid disconnected tubing on the ordered union of connected graphs."""
    r = len(graphs)
    for tubings in product(*(enumerate_tubings(g) for g in graphs)):
        for flags in product((False, True), repeat=r):
            if r == 1 and flags[0] or r > 1 and not any(flags):
                continue
            yield DTubing(tuple(Component(T, f) for T, f in zip(tubings, flags)))


def simplex_faces(n: int) -> list[DTubing]:
    """The tubings of C_n: one single-node component per node."""
    point = trivial_tubing(edgeless(1))
    return list(enumerate_dtubings([point.graph] * n))


def _relation_sides(x: DTubing, y: DTubing, z: DTubing) -> Iterator[tuple[str, DChain, DChain]]:
    V, D, X = DTubOp.VDASH, DTubOp.DASHV, DTubOp.TIMES
    for op in (V, D, X):
        yield f"assoc {op}", apply_op(op, apply_op(op, x, y), z), apply_op(op, x, apply_op(op, y, z))
    yield "i", apply_op(D, apply_op(V, x, y), z), apply_op(V, x, apply_op(D, y, z))
    yield "ii", apply_op(D, apply_op(D, x, y), z), apply_op(D, x, apply_op(V, y, z))
    yield "iii", apply_op(V, apply_op(D, x, y), z), apply_op(V, x, apply_op(V, y, z))
    yield "iv", apply_op(X, apply_op(V, x, y), z), apply_op(V, x, apply_op(X, y, z))
    yield "v", apply_op(D, apply_op(X, x, y), z), apply_op(X, x, apply_op(D, y, z))
    yield "vi", apply_op(X, apply_op(D, x, y), z), apply_op(X, x, apply_op(V, y, z))
    yield "vii left", apply_op(V, apply_op(X, x, y), z), DChain.zero()
    yield "vii right", apply_op(D, x, apply_op(X, y, z)), DChain.zero()


def trias_triple_failures(triples: Iterable[tuple[DTubing, DTubing, DTubing]]) -> Iterator[CaseFailure]:
    """Product relations on each given triple."""
    for x, y, z in triples:
        for name, left, right in _relation_sides(x, y, z):
            if left != right:
                yield CaseFailure(f"trias {name} {x!r} {y!r} {z!r}", {
                    "relation": name, "left": repr(left), "right": repr(right),
                })


def trias_failures(sample: Sequence[DTubing]) -> Iterator[CaseFailure]:
    """Product relations over all triples of ``sample``."""
    return trias_triple_failures(product(sample, repeat=3))


def trias_relation_check(sample: Sequence[DTubing]) -> bool:
    return next(trias_failures(sample), None) is None


def differential_square_failures(elements: Iterable[DTubing]) -> Iterator[CaseFailure]:
    for x in elements:
        dd = differential_chain(differential(x))
        if dd:
            yield CaseFailure(f"d2 {x!r}", {"element": repr(x), "dSquared": repr(dd)})


def leibniz_failures(pairs: Iterable[tuple[DTubing, DTubing]]) -> Iterator[CaseFailure]:
    """The three Leibniz rules of d against ×, ⊢ and ⊣ on each pair."""
    V, D, X = DTubOp.VDASH, DTubOp.DASHV, DTubOp.TIMES
    for x, y in pairs:
        dx, dy = differential(x), differential(y)
        sign = (-1) ** degree(x)
        expected = {
            X: apply_op(X, dx, y) - sign * apply_op(X, x, dy) + sign * (apply_op(D, x, y) - apply_op(V, x, y)),
            V: apply_op(V, dx, y) + sign * apply_op(V, x, dy),
            D: apply_op(D, dx, y) + sign * apply_op(D, x, dy),
        }
        for op, rhs in expected.items():
            lhs = differential_chain(apply_op(op, x, y))
            if lhs != rhs:
                yield CaseFailure(f"leibniz {op} {x!r} {y!r}", {"left": repr(lhs), "right": repr(rhs)})


def differential_failures(sample: Sequence[DTubing]) -> Iterator[CaseFailure]:
    """d² = 0 on each element and the three Leibniz rules on each pair."""
    yield from differential_square_failures(sample)
    yield from leibniz_failures(product(sample, repeat=2))


def join_graph(T: Tubing, S: Tubing) -> Graph:
    """Γ ⊔ Ω plus the edge from the last free node of T to the first free node of S."""
    n = T.graph.n
    a = max_node(T.free_nodes(T.universal))
    b = min_node(S.free_nodes(S.universal)) + n
    base = disjoint_union([T.graph, S.graph])
    adj = list(base.adjacency)
    adj[a - 1] |= 1 << (b - 1)
    adj[b - 1] |= 1 << (a - 1)
    return Graph(base.n, tuple(adj))


def _joined(T: Tubing, S: Tubing, left: Sequence[NodeSet], right: Sequence[NodeSet]) -> Tubing:
    g = join_graph(T, S)
    n = T.graph.n
    return Tubing(g, tuple(left) + tuple(shift(s, n) for s in right) + (g.all_nodes,))


def l_right(T: Tubing, S: Tubing) -> Tubing:
    """T ▷ S: all tubes of T, the proper tubes of S."""
    return _joined(T, S, T.tubes, S.proper_tubes)


def l_left(T: Tubing, S: Tubing) -> Tubing:
    """T ◁ S: the proper tubes of T, all tubes of S."""
    return _joined(T, S, T.proper_tubes, S.tubes)


def l_perp(T: Tubing, S: Tubing) -> Tubing:
    return _joined(T, S, T.proper_tubes, S.proper_tubes)


def lalgebra_failures(sample: Sequence[Tubing]) -> Iterator[CaseFailure]:
    """The L-identity, associativity of ⊥ and its three mixed relations."""
    for x, y, z in product(sample, repeat=3):
        cases = [
            ("L", l_right(x, l_left(y, z)), l_left(l_right(x, y), z)),
            ("perp assoc", l_perp(l_perp(x, y), z), l_perp(x, l_perp(y, z))),
            ("i", l_right(x, l_perp(y, z)), l_perp(l_right(x, y), z)),
            ("iii", l_perp(x, l_left(y, z)), l_left(l_perp(x, y), z)),
        ]
        for name, left, right in cases:
            if left != right:
                yield CaseFailure(f"lalgebra {name}", {"left": repr(left), "right": repr(right)})
        left = l_perp(x, l_right(y, z))
        right = l_perp(l_left(x, y), z)
        if left.tubes != right.tubes:
            yield CaseFailure("lalgebra ii", {"left": repr(left), "right": repr(right)})
