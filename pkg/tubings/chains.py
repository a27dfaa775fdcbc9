"""Signed chains of tubings: compositions, the boundary map and the pre-Lie coproduct.

Orientation convention: a tubing T is oriented as the ordered product of the
top cells of its fiber graphs, one per tube, taken in canonical numbering
order. The fiber of a tube u has |free nodes of u| - 1 as degree, so the
degrees add up to the dimension of T. Re-ordering tubes costs the Koszul sign
of the permutation with respect to these degrees. Inside a fiber graph G the
facet cut out by a proper tube s carries the sign (-1)^|s| sgn(σ_s), where
sgn counts every inversion of σ_s.
"""

from __future__ import annotations

from functools import lru_cache
import logging
from typing import Callable, Generic, Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, TypeVar, Union

from tubings.errors import InputError, PreconditionError
from tubings.graph import (
    Graph,
    NodeSet,
    all_tubes,
    complement_embedding,
    is_tube,
    min_node,
    nodes_of,
    restrict_graph,
    size,
)
from tubings.substitution import close_in_tube, lift_from_complement
from tubings.tubing import (
    Tubing,
    fiber_embedding,
    induce_on_complement,
    numbered_tubes,
    restrict_to_tube,
    trivial_tubing,
)

logger = logging.getLogger(__name__)

K = TypeVar("K")


class Chain(Generic[K]):
    """A finite integer combination of basis keys, normalised on construction."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[K, int], Iterable[tuple[K, int]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[K, int] = {}
        for key, coeff in items:
            acc[key] = acc.get(key, 0) + coeff
        kept = [(k, c) for k, c in acc.items() if c]
        kept.sort(key=lambda kc: self.order(kc[0]))
        self._terms: tuple[tuple[K, int], ...] = tuple(kept)
        self._check()

    @staticmethod
    def order(key: K) -> tuple:
        raise NotImplementedError

    def _check(self) -> None:
        pass

    @classmethod
    def single(cls, key: K, coeff: int = 1):
        return cls([(key, coeff)])

    @classmethod
    def zero(cls):
        return cls()

    @property
    def terms(self) -> tuple[tuple[K, int], ...]:
        return self._terms

    def coefficient(self, key: K) -> int:
        for k, c in self._terms:
            if k == key:
                return c
        return 0

    def keys(self) -> list[K]:
        return [k for k, _ in self._terms]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[K, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other):
        return type(self)(list(self._terms) + list(other._terms))

    def __sub__(self, other):
        return type(self)(list(self._terms) + [(k, -c) for k, c in other._terms])

    def __neg__(self):
        return type(self)([(k, -c) for k, c in self._terms])

    def __mul__(self, scalar: int):
        return type(self)([(k, c * scalar) for k, c in self._terms])

    __rmul__ = __mul__

    def map_linear(self, f: Callable[[K], "Chain"]):
        """Apply ``f`` to every basis key and collect with coefficients."""
        out = []
        for k, c in self._terms:
            out.extend((k2, c * c2) for k2, c2 in f(k))
        return out

    def __repr__(self) -> str:
        if not self._terms:
            return f"{type(self).__name__}(0)"
        inner = " ".join(f"{'+' if c > 0 else '-'}{abs(c)}·{k!r}" for k, c in self._terms)
        return f"{type(self).__name__}({inner})"


class TubingChain(Chain[Tubing]):
    """Integer combination of tubings of one graph."""

    @staticmethod
    def order(key: Tubing) -> tuple:
        return key.sort_key()

    def _check(self) -> None:
        graphs = {k.graph for k, _ in self._terms}
        if len(graphs) > 1:
            raise InputError("A chain mixes tubings of different graphs")

    def boundary(self) -> TubingChain:
        return boundary_chain(self)


Factor = Optional[Tubing]  # None stands for the unit (the empty tube)


def _factor_key(f: Factor) -> tuple:
    return (0,) if f is None else (1,) + f.sort_key()


class CoproductChain(Chain[tuple]):
    """Integer combination of tensors of tubings, the unit written as ``None``."""

    @staticmethod
    def order(key: tuple) -> tuple:
        return tuple(_factor_key(f) for f in key)


class SignedPermutation(NamedTuple):
    """A permutation of the nodes of ``graph`` given by its image list."""
    sigma: tuple[int, ...]
    graph: Graph


def sigma_t(g: Graph, t: NodeSet) -> SignedPermutation:
    """Tube nodes ascending, then the remaining nodes ascending."""
    if not is_tube(g, t):
        raise PreconditionError(f"{list(nodes_of(t))} is not a tube of {g!r}")
    rest = g.all_nodes & ~t
    return SignedPermutation(nodes_of(t) + nodes_of(rest), g)


def _inversions(sigma: Sequence[int], counted: Callable[[int, int], bool]) -> int:
    position = {v: i for i, v in enumerate(sigma)}
    count = 0
    for i in sigma:
        for j in sigma:
            if i < j and position[j] < position[i] and counted(i, j):
                count += 1
    return count


def graph_signature(g: Graph, sigma: Union[SignedPermutation, Sequence[int]]) -> int:
    """(-1) to the number of inverted pairs that are edges of ``g``."""
    image = sigma.sigma if isinstance(sigma, SignedPermutation) else tuple(sigma)
    return -1 if _inversions(image, g.has_edge) % 2 else 1


def permutation_sign(sigma: Union[SignedPermutation, Sequence[int]]) -> int:
    """Sign of a permutation counting every inversion."""
    image = sigma.sigma if isinstance(sigma, SignedPermutation) else tuple(sigma)
    return -1 if _inversions(image, lambda i, j: True) % 2 else 1


def incidence_sign(g: Graph, s: NodeSet) -> int:
    """Sign of the facet of the top cell of ``g`` cut out by the proper tube ``s``."""
    return (-1) ** size(s) * permutation_sign(sigma_t(g, s))


def alpha(g: Graph, t: NodeSet, S: Tubing) -> int:
    """-1 when min(t) precedes every node of the maximal tubes of S, else +1.

    A tubing S without proper tubes gives -1.
    """
    emb = complement_embedding(g, t)
    if S.graph != emb.graph:
        raise InputError(f"Expected a tubing of {emb.graph!r}, got one of {S.graph!r}")
    for s in S.proper_tubes:
        if g.is_adjacent(emb.pull(s), t):
            raise PreconditionError(f"{list(nodes_of(t))} is linked to a proper tube of S")
    union = 0
    for s in S.maximal_proper_tubes():
        union |= emb.pull(s)
    if not union:
        return -1
    return -1 if min_node(t) < min_node(union) else 1


def orientation_degrees(T: Tubing) -> dict[NodeSet, int]:
    """Degree of the fiber top cell attached to each tube."""
    return {u: size(T.free_nodes(u)) - 1 for u in T.tubes}


def fiber_graphs(T: Tubing) -> list[tuple[NodeSet, Graph]]:
    """Each tube with its fiber graph, in numbering order."""
    return [(u, fiber_embedding(T, u).graph) for u in numbered_tubes(T)]


def koszul_sign(listing: Sequence[NodeSet], target: Sequence[NodeSet],
                degrees: Mapping[NodeSet, int]) -> int:
    """Sign of re-ordering graded tubes from ``listing`` to ``target``."""
    position = {t: i for i, t in enumerate(target)}
    odd = [position[t] for t in listing if degrees[t] % 2]
    swaps = sum(1 for i in range(len(odd)) for j in range(i + 1, len(odd)) if odd[i] > odd[j])
    return -1 if swaps % 2 else 1


def _orient(listing: Sequence[NodeSet], U: Tubing) -> int:
    return koszul_sign(listing, numbered_tubes(U), orientation_degrees(U))


def circ_signed(S: Tubing, W: Tubing, g: Graph, t: NodeSet) -> TubingChain:
    """S ∘_(Γ,t) W: insert S into the proper tube ``t`` and W into Γ_t*."""
    inner = restrict_graph(g, t)
    if t == g.all_nodes:
        raise PreconditionError("Composition needs a proper tube")
    outer = complement_embedding(g, t)
    if S.graph != inner.graph:
        raise InputError(f"Expected a tubing of {inner.graph!r} for the tube, got {S.graph!r}")
    if W.graph != outer.graph:
        raise InputError(f"Expected a tubing of {outer.graph!r} for the complement, got {W.graph!r}")
    listing = [inner.pull(s) for s in numbered_tubes(S)]
    listing += [lift_from_complement(g, outer, t, w) for w in numbered_tubes(W)]
    U = Tubing(g, tuple(listing))
    return TubingChain.single(U, _orient(listing, U))


def circ_chains(A: TubingChain, B: TubingChain, g: Graph, t: NodeSet) -> TubingChain:
    """Bilinear extension of ``circ_signed``."""
    out: list[tuple[Tubing, int]] = []
    for S, a in A:
        for W, b in B:
            out.extend((U, a * b * c) for U, c in circ_signed(S, W, g, t))
    return TubingChain(out)


def decompose(T: Tubing, t: NodeSet) -> int:
    """The sign with T = sign · (T|_t ∘_(Γ,t) T_t*) for a proper tube ``t`` of T."""
    if t not in T.proper_tubes:
        raise PreconditionError(f"{list(nodes_of(t))} is not a proper tube of {T!r}")
    A = restrict_to_tube(T, t)
    B = induce_on_complement(T, t)
    ((U, sign),) = circ_signed(A, B, T.graph, t).terms
    if U != T:
        raise PreconditionError(f"Decomposition at {list(nodes_of(t))} does not rebuild {T!r}")
    return sign


def _base_boundary(g: Graph) -> TubingChain:
    T = trivial_tubing(g)
    out = []
    for t in all_tubes(g):
        if t == g.all_nodes:
            continue
        out.append((T.with_tubes((t,)), incidence_sign(g, t)))
    return TubingChain(out)


def boundary_recursive(T: Tubing, t: NodeSet | None = None) -> TubingChain:
    """∂T through the decomposition T = ±(T|_t ∘ T_t*) and the Leibniz rule.

    Without ``t`` the proper tube with the smallest number is used.
    """
    proper = [u for u in numbered_tubes(T) if u != T.universal]
    if not proper:
        return _base_boundary(T.graph)
    if t is None:
        t = proper[0]
    sign = decompose(T, t)
    A = restrict_to_tube(T, t)
    B = induce_on_complement(T, t)
    left = circ_chains(boundary(A), TubingChain.single(B), T.graph, t)
    right = circ_chains(TubingChain.single(A), boundary(B), T.graph, t)
    return sign * (left + (-1) ** A.dimension * right)


@lru_cache(maxsize=None)
def boundary(T: Tubing) -> TubingChain:
    """The boundary ∂T, a signed sum of the tubings covering T."""
    return boundary_recursive(T)


def boundary_fiberwise(T: Tubing) -> TubingChain:
    """∂T summed fiber by fiber in numbering order, without recursion."""
    order = numbered_tubes(T)
    degrees = orientation_degrees(T)
    out = []
    before = 0
    for u in order:
        emb = fiber_embedding(T, u)
        G = emb.graph
        for s in all_tubes(G):
            if s == G.all_nodes:
                continue
            new = close_in_tube(T, u, emb.pull(s))
            U = T.with_tubes((new,))
            listing: list[NodeSet] = []
            for v in order:
                listing.extend((new, u) if v == u else (v,))
            sign = (-1) ** before * incidence_sign(G, s) * _orient(listing, U)
            out.append((U, sign))
        before += degrees[u]
    return TubingChain(out)


def boundary_chain(c: TubingChain) -> TubingChain:
    """Linear extension of ``boundary``."""
    return TubingChain(c.map_linear(boundary))


def prelie_coproduct(T: Factor) -> CoproductChain:
    """Δ•(T) = 1 ⊗ T + Σ_t T|_t ⊗ T_t*, with T ⊗ 1 for the universal tube."""
    if T is None:
        return CoproductChain.single((None, None))
    terms: list[tuple[tuple, int]] = [((None, T), 1)]
    for t in T.tubes:
        left = restrict_to_tube(T, t)
        right = None if t == T.universal else induce_on_complement(T, t)
        terms.append(((left, right), 1))
    return CoproductChain(terms)


def coassociator(T: Factor) -> CoproductChain:
    """(Id ⊗ Δ• − Δ• ⊗ Id) Δ•(T) as a chain of triple tensors."""
    out: list[tuple[tuple, int]] = []
    for (a, b), c in prelie_coproduct(T):
        out.extend(((a, x, y), c * d) for (x, y), d in prelie_coproduct(b))
        out.extend(((x, y, b), -c * d) for (x, y), d in prelie_coproduct(a))
    return CoproductChain(out)


def swap_first_two(c: CoproductChain) -> CoproductChain:
    """(τ ⊗ Id) on triple tensors."""
    return CoproductChain([((key[1], key[0]) + key[2:], coeff) for key, coeff in c])
