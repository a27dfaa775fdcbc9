"""Tubings of connected graphs.

A ``Tubing`` keeps its tubes as node masks in canonical order (min node, size,
lexicographic), always including the universal tube. The face poset, restriction
and induction to tubes, the canonical tube numbering and the bijection with
surjections for complete graphs live here as well.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
import logging
from typing import Iterable, Sequence, Union

from tubings.errors import CapExceededError, InputError, PreconditionError
from tubings.graph import (
    Embedding,
    Graph,
    NodeSet,
    all_tubes,
    complement_embedding,
    complete,
    is_tube,
    iterated_complement_embedding,
    min_node,
    nodes_of,
    restrict_graph,
    size,
    tube_key,
)
from tubings.types import PairClass

logger = logging.getLogger(__name__)

ENUMERATION_CAP = 10


@dataclass(frozen=True)
class Tubing:
    """A tubing of a connected graph.

    The constructor trusts its input apart from canonicalising the tube order;
    use ``make_tubing`` to validate.
    """
    graph: Graph
    tubes: tuple[NodeSet, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.tubes), key=tube_key))
        object.__setattr__(self, "tubes", ordered)

    @property
    def universal(self) -> NodeSet:
        return self.graph.all_nodes

    @property
    def proper_tubes(self) -> tuple[NodeSet, ...]:
        return tuple(t for t in self.tubes if t != self.universal)

    @property
    def dimension(self) -> int:
        """Dimension of the face: nodes minus tubes."""
        return self.graph.n - len(self.tubes)

    def __len__(self) -> int:
        return len(self.tubes)

    def __contains__(self, t: object) -> bool:
        return t in self.tubes

    def maximal_proper_tubes(self) -> tuple[NodeSet, ...]:
        proper = self.proper_tubes
        return tuple(t for t in proper if not any(t != u and t & ~u == 0 for u in proper))

    def maximal_subtubes(self, u: NodeSet) -> tuple[NodeSet, ...]:
        """Maximal tubes of the tubing strictly inside ``u``."""
        inside = [t for t in self.tubes if t != u and t & ~u == 0]
        return tuple(t for t in inside if not any(t != v and t & ~v == 0 for v in inside))

    def free_nodes(self, u: NodeSet) -> NodeSet:
        """Nodes of ``u`` lying in no tube strictly inside ``u``."""
        out = u
        for t in self.maximal_subtubes(u):
            out &= ~t
        return out

    def with_tubes(self, extra: Iterable[NodeSet]) -> Tubing:
        return Tubing(self.graph, self.tubes + tuple(extra))

    def sort_key(self) -> tuple:
        return (self.graph.n, self.graph.edges, tuple(tube_key(t) for t in self.tubes))

    def node_lists(self) -> list[list[int]]:
        return [list(nodes_of(t)) for t in self.tubes]

    def __repr__(self) -> str:
        return f"Tubing({self.node_lists()} on {self.graph!r})"


class _EmptyTubing:
    """Marker for the empty restriction of a tubing to a tube containing none of its tubes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EMPTY_TUBING"

    def __bool__(self) -> bool:
        return False


EMPTY_TUBING = _EmptyTubing()

Restriction = Union[Tubing, _EmptyTubing]


def trivial_tubing(g: Graph) -> Tubing:
    """The tubing T_Γ made of the universal tube alone."""
    return Tubing(g, (g.all_nodes,))


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise PreconditionError(f"{g!r} is not connected")


def classify_pair(g: Graph, t: NodeSet, u: NodeSet) -> PairClass:
    """Relative position of two distinct tubes."""
    for s in (t, u):
        if not is_tube(g, s):
            raise PreconditionError(f"{list(nodes_of(s))} is not a tube of {g!r}")
    if t == u:
        raise PreconditionError("classify_pair needs two distinct tubes")
    return _classify(g, t, u)


def _classify(g: Graph, t: NodeSet, u: NodeSet) -> PairClass:
    if t & ~u == 0 or u & ~t == 0:
        return PairClass.NESTED
    if t & u:
        return PairClass.INTERSECTING
    if g.is_adjacent(t, u):
        return PairClass.LINKED
    return PairClass.FAR_APART


def compatible(g: Graph, t: NodeSet, u: NodeSet) -> bool:
    return t == u or _classify(g, t, u) in (PairClass.NESTED, PairClass.FAR_APART)


def is_tubing(g: Graph, tubes: Iterable[NodeSet]) -> bool:
    """True iff the family is a tubing of the connected graph ``g``."""
    _require_connected(g)
    family = sorted(set(tubes), key=tube_key)
    if g.all_nodes not in family:
        return False
    for t in family:
        if t >> g.n or not g.is_connected_set(t):
            return False
    for i, t in enumerate(family):
        for u in family[i + 1:]:
            if not compatible(g, t, u):
                return False
    return True


def make_tubing(g: Graph, tubes: Iterable[NodeSet]) -> Tubing:
    """Validate a tube family and return it as a ``Tubing``."""
    family = list(tubes)
    for t in family:
        g.check_nodes(t)
    if not is_tubing(g, family):
        raise PreconditionError(
            f"{[list(nodes_of(t)) for t in family]} is not a tubing of {g!r}"
        )
    return Tubing(g, tuple(family))


def _extend(g: Graph, chosen: list[NodeSet], candidates: Sequence[NodeSet], start: int,
            out: list[Tubing]) -> None:
    universal = g.all_nodes
    out.append(Tubing(g, tuple(chosen) + (universal,)))
    for i in range(start, len(candidates)):
        t = candidates[i]
        if all(compatible(g, t, u) for u in chosen):
            chosen.append(t)
            _extend(g, chosen, candidates, i + 1, out)
            chosen.pop()


def _branch(g: Graph, candidates: Sequence[NodeSet], i: int) -> list[Tubing]:
    out: list[Tubing] = []
    _extend(g, [candidates[i]], candidates, i + 1, out)
    return out


def enumerate_tubings(g: Graph, workers: int | None = None) -> tuple[Tubing, ...]:
    """All tubings of a connected graph, in deterministic depth-first order.

    With ``workers`` set, the first-level branches are explored on a thread
    pool and merged in branch order, so the result equals the sequential one.
    """
    _require_connected(g)
    if g.n > ENUMERATION_CAP:
        raise CapExceededError("tubing enumeration node count", g.n, ENUMERATION_CAP)
    if workers:
        return _enumerate_parallel(g, workers)
    return _enumerate_cached(g)


@lru_cache(maxsize=4096)
def _enumerate_cached(g: Graph) -> tuple[Tubing, ...]:
    candidates = [t for t in all_tubes(g) if t != g.all_nodes]
    out: list[Tubing] = []
    _extend(g, [], candidates, 0, out)
    logger.debug(f"Enumerated {len(out)} tubings of {g!r}")
    return tuple(out)


def _enumerate_parallel(g: Graph, workers: int) -> tuple[Tubing, ...]:
    candidates = [t for t in all_tubes(g) if t != g.all_nodes]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        branches = list(pool.map(lambda i: _branch(g, candidates, i), range(len(candidates))))
    out = [trivial_tubing(g)]
    for branch in branches:
        out.extend(branch)
    return tuple(out)


def face_counts(g: Graph, tubings: Iterable[Tubing]) -> list[int]:
    """Tally already enumerated tubings of g by dimension 0..n-1."""
    counts = [0] * g.n
    for T in tubings:
        counts[T.dimension] += 1
    return counts


def f_vector(g: Graph) -> list[int]:
    """Face counts by dimension 0..n-1."""
    return face_counts(g, enumerate_tubings(g))


def tubing_count(g: Graph) -> int:
    return len(enumerate_tubings(g))


def poset_leq(T: Tubing, U: Tubing) -> bool:
    """T ⪯ U: T is obtained from U by adding compatible tubes."""
    if T.graph != U.graph:
        raise InputError("poset_leq compares tubings of different graphs")
    return set(U.tubes) <= set(T.tubes)


def cover_tubes(T: Tubing) -> list[NodeSet]:
    """Tubes that can be added to T one at a time, in canonical order."""
    g = T.graph
    return [t for t in all_tubes(g) if t not in T and all(compatible(g, t, u) for u in T.tubes)]


def covers(T: Tubing) -> list[Tubing]:
    """The tubings T ∪ {t} lying directly below T in the face poset."""
    return [T.with_tubes((t,)) for t in cover_tubes(T)]


def restrict_to_tube(T: Tubing, t: NodeSet) -> Restriction:
    """The tubes of T inside ``t``, renumbered into Γ_t.

    The result always holds the universal tube of Γ_t, so when ``t`` is not a
    tube of T the restriction has one tube more than T has inside ``t``. A tube
    holding none of T's tubes gives ``EMPTY_TUBING``.
    """
    emb = restrict_graph(T.graph, t)
    inside = [u for u in T.tubes if u & ~t == 0]
    if not inside:
        return EMPTY_TUBING
    tubes = [emb.push(u) for u in inside]
    return Tubing(emb.graph, tuple(tubes) + (emb.graph.all_nodes,))


def induce_on_complement(T: Tubing, t: NodeSet) -> Tubing:
    """The tubing T_t* induced on the reconnected complement of ``t``."""
    g = T.graph
    if not is_tube(g, t):
        raise PreconditionError(f"{list(nodes_of(t))} is not a tube of {g!r}")
    if not all(compatible(g, t, u) for u in T.tubes):
        raise PreconditionError(
            f"{list(nodes_of(t))} does not induce a tubing: T ∪ {{t}} is not a tubing"
        )
    emb = complement_embedding(g, t)
    tubes = []
    for u in T.tubes:
        if u & t == 0:
            tubes.append(u)
        elif u & ~t:
            tubes.append(u & ~t)
    return Tubing(emb.graph, tuple(emb.push(u) for u in tubes))


def fiber_embedding(T: Tubing, u: NodeSet) -> Embedding:
    """The graph (Γ_u) complemented by the maximal tubes of T inside ``u``."""
    inner = restrict_graph(T.graph, u)
    maxt = [inner.push(m) for m in T.maximal_subtubes(u)]
    return inner.then(iterated_complement_embedding(inner.graph, maxt))


def complement_by_maximal(T: Tubing) -> Embedding:
    """Γ_T*: the complement of Γ by the maximal proper tubes of T."""
    return fiber_embedding(T, T.universal)


def numbered_tubes(T: Tubing) -> tuple[NodeSet, ...]:
    """Tubes of T in canonical numbering order.

    Innermost tubes come first, ordered by their smallest surviving node; then
    the numbering continues on the tubing induced on the complement.
    """
    remaining = list(T.tubes)
    removed = 0
    out: list[NodeSet] = []
    while remaining:
        innermost = [t for t in remaining
                     if not any(u != t and u & ~t == 0 for u in remaining)]
        keys = [min_node(t & ~removed) for t in innermost]
        if len(set(keys)) != len(keys):
            raise PreconditionError("Innermost tubes share a minimal node")
        innermost.sort(key=lambda t: min_node(t & ~removed))
        out.extend(innermost)
        for t in innermost:
            removed |= t
            remaining.remove(t)
    return tuple(out)


def restriction_map(T: Tubing, omega: Graph) -> Tubing:
    """Send each tube of T to its connected components in the sparser graph Ω."""
    if omega.n != T.graph.n:
        raise InputError("Restriction needs graphs with the same nodes")
    if not omega.is_subgraph_of(T.graph):
        raise InputError("Restriction needs Edg(Ω) ⊆ Edg(Γ)")
    if not omega.is_connected():
        raise InputError(f"{omega!r} is not connected")
    tubes = set()
    for t in T.tubes:
        tubes.update(omega.components(t))
    return Tubing(omega, tuple(tubes))


def _require_complete(T: Tubing) -> None:
    g = T.graph
    if len(g.edges) != g.n * (g.n - 1) // 2:
        raise PreconditionError(f"{g!r} is not a complete graph")


def to_surjection(T: Tubing) -> tuple[int, ...]:
    """The map x_T: node i goes to j when i ∈ t^j ∖ t^(j−1), tubes inner to outer."""
    _require_complete(T)
    chain = sorted(T.tubes, key=size)
    x = [0] * T.graph.n
    for j, t in enumerate(chain, start=1):
        for v in nodes_of(t):
            if x[v - 1] == 0:
                x[v - 1] = j
    return tuple(x)


def from_surjection(x: Sequence[int]) -> Tubing:
    """Inverse of ``to_surjection`` on the complete graph with len(x) nodes."""
    n = len(x)
    if n == 0:
        raise InputError("Empty surjection")
    r = max(x)
    if sorted(set(x)) != list(range(1, r + 1)):
        raise InputError(f"{list(x)} is not a surjection onto 1..{r}")
    tubes = []
    for j in range(1, r + 1):
        tubes.append(sum(1 << i for i, v in enumerate(x) if v <= j))
    return Tubing(complete(n), tuple(tubes))
