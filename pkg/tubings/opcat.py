"""The operadic category of tubings.

Objects are tubings of connected graphs; there is one morphism T → S exactly
when S ⊆ T on the same graph. The cardinality of an object is its number of
tubes, numbered by ``numbered_tubes``; the fiber of T → S over the i-th tube s
of S is the tubing T induces on the fiber graph of s.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import logging
from typing import Iterator, NamedTuple

from tubings.errors import InputError
from tubings.graph import Graph, NodeSet, complete, nodes_of, size
from tubings.serialization import encode_tubing
from tubings.tubing import Tubing, enumerate_tubings, fiber_embedding, numbered_tubes, to_surjection
from tubings.types import AxiomResult

logger = logging.getLogger(__name__)


class OcdObject(NamedTuple):
    graph: Graph
    tubing: Tubing

    @classmethod
    def of(cls, T: Tubing) -> OcdObject:
        return cls(T.graph, T)

    @property
    def cardinality(self) -> int:
        return len(self.tubing)


@dataclass(frozen=True)
class OcdMorphism:
    """The unique morphism from a finer tubing to a coarser one."""
    graph: Graph
    source: Tubing
    target: Tubing

    def __post_init__(self) -> None:
        if self.source.graph != self.graph or self.target.graph != self.graph:
            raise InputError("Morphism ends must be tubings of the morphism's graph")
        if not set(self.target.tubes) <= set(self.source.tubes):
            raise InputError(f"No morphism {self.source!r} → {self.target!r}: target is not coarser")

    @classmethod
    def between(cls, T: Tubing, S: Tubing) -> OcdMorphism:
        return cls(T.graph, T, S)


def identity(T: Tubing) -> OcdMorphism:
    return OcdMorphism.between(T, T)


def compose(f: OcdMorphism, g: OcdMorphism) -> OcdMorphism:
    """g ∘ f."""
    if f.target != g.source:
        raise InputError(f"Cannot compose: {f.target!r} is not {g.source!r}")
    return OcdMorphism.between(f.source, g.target)


def tube_numbering(T: Tubing) -> dict[NodeSet, int]:
    """The bijection from the tubes of T onto 1..|T|."""
    return {t: k for k, t in enumerate(numbered_tubes(T), start=1)}


def _minimal_containing(S: Tubing, t: NodeSet) -> NodeSet:
    return min((s for s in S.tubes if t & ~s == 0), key=size)


def cardinality_of_morphism(f: OcdMorphism) -> tuple[int, ...]:
    """|f| as a list: entry k-1 is the image of k."""
    numbering = tube_numbering(f.target)
    return tuple(numbering[_minimal_containing(f.target, t)] for t in numbered_tubes(f.source))


def _tube_at(T: Tubing, i: int) -> NodeSet:
    order = numbered_tubes(T)
    if not 1 <= i <= len(order):
        raise InputError(f"Index {i} is outside 1..{len(order)}")
    return order[i - 1]


def _fiber_parts(f: OcdMorphism, i: int) -> tuple[Graph, list[tuple[NodeSet, NodeSet]]]:
    """The fiber graph and (tube of T, its image in the fiber) pairs."""
    s = _tube_at(f.target, i)
    emb = fiber_embedding(f.target, s)
    maxima = f.target.maximal_subtubes(s)
    pairs = [(u, emb.push(u)) for u in f.source.tubes
             if u & ~s == 0 and not any(u & ~m == 0 for m in maxima)]
    return emb.graph, pairs


def fiber(f: OcdMorphism, i: int) -> OcdObject:
    """f⁻¹(i)."""
    g, pairs = _fiber_parts(f, i)
    return OcdObject(g, Tubing(g, tuple(p for _, p in pairs)))


def fiber_morphism(f: OcdMorphism, g: OcdMorphism, i: int) -> OcdMorphism:
    """f_i: (g∘f)⁻¹(i) → g⁻¹(i)."""
    gf = compose(f, g)
    source, target = fiber(gf, i), fiber(g, i)
    return OcdMorphism(source.graph, source.tubing, target.tubing)


def sub_tubings(T: Tubing) -> Iterator[Tubing]:
    """Every tubing S ⊆ T, that is every target of a morphism out of T."""
    proper = T.proper_tubes
    for k in range(len(proper) + 1):
        for chosen in combinations(proper, k):
            yield Tubing(T.graph, chosen + (T.universal,))


def morphism_chains(g: Graph, length: int) -> Iterator[tuple[Tubing, ...]]:
    """All chains T_0 → T_1 → ... of ``length`` morphisms."""
    def extend(chain: tuple[Tubing, ...]) -> Iterator[tuple[Tubing, ...]]:
        if len(chain) == length + 1:
            yield chain
            return
        for S in sub_tubings(chain[-1]):
            yield from extend(chain + (S,))
    for T in enumerate_tubings(g):
        yield from extend((T,))


def _detail(**tubings: Tubing) -> dict:
    return {name: encode_tubing(T) for name, T in tubings.items()}


def _check_terminal(g: Graph) -> AxiomResult:
    cases = 0
    for T in enumerate_tubings(g):
        cases += 1
        top = Tubing(g, (g.all_nodes,))
        card = cardinality_of_morphism(OcdMorphism.between(T, top))
        if len(top) != 1 or set(card) != {1}:
            return AxiomResult("terminal", cases, _detail(tubing=T))
    return AxiomResult("terminal", cases, None)


def _check_identity_fibers(g: Graph) -> AxiomResult:
    cases = 0
    for T in enumerate_tubings(g):
        for i in range(1, len(T) + 1):
            cases += 1
            F = fiber(identity(T), i)
            if len(F.tubing) != 1:
                return AxiomResult("identity fibers", cases, {**_detail(tubing=T), "index": i})
    return AxiomResult("identity fibers", cases, None)


def _check_fiber_sizes(g: Graph) -> AxiomResult:
    cases = 0
    for T, S in morphism_chains(g, 1):
        f = OcdMorphism.between(T, S)
        card = cardinality_of_morphism(f)
        for i in range(1, len(S) + 1):
            cases += 1
            if fiber(f, i).cardinality != card.count(i):
                return AxiomResult("fiber sizes", cases, {**_detail(source=T, target=S), "index": i})
    return AxiomResult("fiber sizes", cases, None)


def _natural(f: OcdMorphism, g: OcdMorphism, i: int) -> bool:
    """|f_i| agrees with |f| under the identification of fiber tubes with tubes of T."""
    fi = fiber_morphism(f, g, i)
    card = cardinality_of_morphism(fi)
    _, source_pairs = _fiber_parts(compose(f, g), i)
    _, target_pairs = _fiber_parts(g, i)
    source_num = tube_numbering(fi.source)
    target_num = tube_numbering(fi.target)
    target_of = dict(target_pairs)
    for u, pushed in source_pairs:
        image = _minimal_containing(f.target, u)
        if card[source_num[pushed] - 1] != target_num[target_of[image]]:
            return False
    return True


def _check_functoriality(g: Graph) -> AxiomResult:
    cases = 0
    for T, S, Q, R in morphism_chains(g, 3):
        f, h, k = OcdMorphism.between(T, S), OcdMorphism.between(S, Q), OcdMorphism.between(Q, R)
        for i in range(1, len(R) + 1):
            cases += 1
            ok = _natural(f, compose(h, k), i) and _natural(h, k, i)
            if ok:
                fi = fiber_morphism(f, compose(h, k), i)
                hi = fiber_morphism(h, k, i)
                ok = compose(fi, hi) == fiber_morphism(compose(f, h), k, i)
            if not ok:
                return AxiomResult("functoriality", cases, {**_detail(T=T, S=S, Q=Q, R=R), "index": i})
    return AxiomResult("functoriality", cases, None)


def _check_fiber_of_fiber(g: Graph) -> AxiomResult:
    cases = 0
    for T, S, R in morphism_chains(g, 2):
        f, h = OcdMorphism.between(T, S), OcdMorphism.between(S, R)
        card = cardinality_of_morphism(h)
        for j, i in enumerate(card, start=1):
            cases += 1
            fi = fiber_morphism(f, h, i)
            _, pairs = _fiber_parts(h, i)
            j_prime = tube_numbering(fi.target)[dict(pairs)[_tube_at(S, j)]]
            if fiber(f, j) != fiber(fi, j_prime):
                return AxiomResult("fiber of fiber", cases, {**_detail(T=T, S=S, R=R), "index": j})
    return AxiomResult("fiber of fiber", cases, None)


def _check_iterated_fiber_morphisms(g: Graph) -> AxiomResult:
    cases = 0
    for T, S, Q, R in morphism_chains(g, 3):
        f, h, k = OcdMorphism.between(T, S), OcdMorphism.between(S, Q), OcdMorphism.between(Q, R)
        card = cardinality_of_morphism(k)
        for j, i in enumerate(card, start=1):
            cases += 1
            fi = fiber_morphism(f, compose(h, k), i)
            hi = fiber_morphism(h, k, i)
            _, pairs = _fiber_parts(k, i)
            j_prime = tube_numbering(hi.target)[dict(pairs)[_tube_at(Q, j)]]
            if fiber_morphism(fi, hi, j_prime) != fiber_morphism(f, h, j):
                return AxiomResult("iterated fibers", cases, {**_detail(T=T, S=S, Q=Q, R=R), "index": j})
    return AxiomResult("iterated fibers", cases, None)


def axiom_suite(g: Graph) -> list[AxiomResult]:
    """Check every axiom of a strict operadic category on all morphism chains of ``g``."""
    results = [
        _check_terminal(g),
        _check_identity_fibers(g),
        _check_fiber_sizes(g),
        _check_functoriality(g),
        _check_fiber_of_fiber(g),
        _check_iterated_fiber_morphisms(g),
    ]
    for r in results:
        logger.debug(f"{r.axiom}: {r.cases} cases, {'passed' if r.passed else 'failed'}")
    return results


def _compress(values: list[int]) -> tuple[int, ...]:
    rank = {v: k for k, v in enumerate(sorted(set(values)), start=1)}
    return tuple(rank[v] for v in values)


def surjection_check(n: int) -> AxiomResult:
    """On K_n, x_S = |f| ∘ x_T and each fiber is the compressed restriction of x_T."""
    cases = 0
    for T, S in morphism_chains(complete(n), 1):
        cases += 1
        f = OcdMorphism.between(T, S)
        card = cardinality_of_morphism(f)
        x_T, x_S = to_surjection(T), to_surjection(S)
        ok = x_S == tuple(card[v - 1] for v in x_T)
        for i, s in enumerate(numbered_tubes(S), start=1):
            if not ok:
                break
            below = S.maximal_subtubes(s)
            layer = [v for v in nodes_of(s) if not any(m >> (v - 1) & 1 for m in below)]
            ok = to_surjection(fiber(f, i).tubing) == _compress([x_T[v - 1] for v in layer])
        if not ok:
            return AxiomResult("surjections", cases, _detail(source=T, target=S))
    return AxiomResult("surjections", cases, None)
