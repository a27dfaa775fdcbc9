"""Simple finite graphs on totally ordered nodes.

Nodes are numbered 1..n. Node sets are plain integers used as bitmasks:
bit ``i - 1`` is set when node ``i`` belongs to the set. Every construction that
drops nodes renumbers the survivors order-preservingly and returns an
``Embedding`` that remembers where each new node came from.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Iterable, Iterator, NamedTuple, Sequence

from tubings.errors import InputError, PreconditionError

logger = logging.getLogger(__name__)

MAX_NODES = 64

NodeSet = int


def nodeset(nodes: Iterable[int]) -> NodeSet:
    """Build a node mask from 1-based node numbers."""
    mask = 0
    for v in nodes:
        if v < 1 or v > MAX_NODES:
            raise InputError(f"Node {v} is outside 1..{MAX_NODES}")
        mask |= 1 << (v - 1)
    return mask


def nodes_of(mask: NodeSet) -> tuple[int, ...]:
    """Ascending 1-based node numbers of a mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask: NodeSet) -> int:
    return bin(mask).count("1")


def min_node(mask: NodeSet) -> int:
    """Smallest node of a non-empty mask."""
    if not mask:
        raise InputError("Empty node set has no minimum")
    return (mask & -mask).bit_length()


def max_node(mask: NodeSet) -> int:
    if not mask:
        raise InputError("Empty node set has no maximum")
    return mask.bit_length()


def shift(mask: NodeSet, offset: int) -> NodeSet:
    """Move every node of a mask up by ``offset``."""
    return mask << offset


def tube_key(mask: NodeSet) -> tuple:
    """Canonical ordering of node sets: by min node, then size, then lexicographic."""
    nodes = nodes_of(mask)
    return (nodes[0] if nodes else 0, len(nodes), nodes)


@dataclass(frozen=True)
class Graph:
    """Simple graph with nodes 1..n stored as one neighbour mask per node."""
    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.n > MAX_NODES:
            raise InputError(f"Graph must have 1..{MAX_NODES} nodes, got {self.n}")
        if len(self.adjacency) != self.n:
            raise InputError("Adjacency table length does not match node count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph from 1-based edge pairs, rejecting loops and bad endpoints."""
        if n < 1 or n > MAX_NODES:
            raise InputError(f"Graph must have 1..{MAX_NODES} nodes, got {n}")
        adj = [0] * n
        for edge in edges:
            if len(edge) != 2:
                raise InputError(f"Edge {list(edge)} must have exactly two endpoints")
            a, b = int(edge[0]), int(edge[1])
            if not (1 <= a <= n and 1 <= b <= n):
                raise InputError(f"Edge {[a, b]} has an endpoint outside 1..{n}")
            if a == b:
                raise InputError(f"Self-loop at node {a}")
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
        return cls(n, tuple(adj))

    @property
    def all_nodes(self) -> NodeSet:
        return (1 << self.n) - 1

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for a in range(1, self.n + 1):
            for b in nodes_of(self.adjacency[a - 1]):
                if a < b:
                    out.append((a, b))
        return tuple(out)

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a - 1] >> (b - 1) & 1)

    def check_nodes(self, mask: NodeSet) -> None:
        if mask < 0 or mask >> self.n:
            raise InputError(f"Node set {list(nodes_of(mask))} is not inside 1..{self.n}")

    def neighbourhood(self, mask: NodeSet) -> NodeSet:
        """Nodes outside ``mask`` adjacent to some node of ``mask``."""
        out = 0
        for v in nodes_of(mask):
            out |= self.adjacency[v - 1]
        return out & ~mask

    def is_adjacent(self, a: NodeSet, b: NodeSet) -> bool:
        """True when some edge joins a node of ``a`` to a node of ``b``."""
        return bool(self.neighbourhood(a) & b)

    def reach(self, start: NodeSet, within: NodeSet) -> NodeSet:
        """All nodes of ``within`` reachable from ``start`` inside ``within``."""
        seen = start & within
        frontier = seen
        while frontier:
            grow = self.neighbourhood(frontier) & within & ~seen
            seen |= grow
            frontier = grow
        return seen

    def is_connected_set(self, mask: NodeSet) -> bool:
        if not mask:
            return False
        return self.reach(mask & -mask, mask) == mask

    def is_connected(self) -> bool:
        return self.is_connected_set(self.all_nodes)

    def components(self, mask: NodeSet | None = None) -> list[NodeSet]:
        """Connected components of the subgraph induced on ``mask``, by min node."""
        rest = self.all_nodes if mask is None else mask
        out = []
        while rest:
            comp = self.reach(rest & -rest, rest)
            out.append(comp)
            rest &= ~comp
        return out

    def is_subgraph_of(self, other: Graph) -> bool:
        """Same nodes and every edge of ``self`` is an edge of ``other``."""
        if self.n != other.n:
            return False
        return all(a & ~b == 0 for a, b in zip(self.adjacency, other.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


class Embedding(NamedTuple):
    """A renumbered graph together with the parent node of each of its nodes."""
    graph: Graph
    preimage: tuple[int, ...]  # preimage[i - 1] is the parent node of node i

    def pull(self, mask: NodeSet) -> NodeSet:
        """Translate a node set of ``graph`` into parent coordinates."""
        out = 0
        for v in nodes_of(mask):
            out |= 1 << (self.preimage[v - 1] - 1)
        return out

    def push(self, mask: NodeSet) -> NodeSet:
        """Translate the part of a parent node set that survives into ``graph``."""
        out = 0
        for i, p in enumerate(self.preimage):
            if mask >> (p - 1) & 1:
                out |= 1 << i
        return out

    @property
    def image(self) -> NodeSet:
        return nodeset(self.preimage)

    def then(self, inner: Embedding) -> Embedding:
        """Compose with an embedding taken relative to ``self.graph``."""
        return Embedding(inner.graph, tuple(self.preimage[p - 1] for p in inner.preimage))


def identity_embedding(g: Graph) -> Embedding:
    return Embedding(g, tuple(range(1, g.n + 1)))


def _relabel(g: Graph, keep: NodeSet, extra: NodeSet = 0) -> Embedding:
    """Induced graph on ``keep``; nodes of ``extra`` additionally form a clique."""
    preimage = nodes_of(keep)
    position = {p: i for i, p in enumerate(preimage)}
    adj = []
    for p in preimage:
        nbrs = g.adjacency[p - 1] & keep
        if extra >> (p - 1) & 1:
            nbrs |= extra & ~(1 << (p - 1))
        row = 0
        for q in nodes_of(nbrs):
            row |= 1 << position[q]
        adj.append(row)
    return Embedding(Graph(len(preimage), tuple(adj)), preimage)


def is_tube(g: Graph, s: NodeSet) -> bool:
    """True iff ``s`` is non-empty and induces a connected subgraph."""
    g.check_nodes(s)
    return g.is_connected_set(s)


def _require_tube(g: Graph, t: NodeSet) -> None:
    if not is_tube(g, t):
        raise PreconditionError(f"{list(nodes_of(t))} is not a tube of {g!r}")


def restrict_graph(g: Graph, t: NodeSet) -> Embedding:
    """The induced subgraph on a tube, renumbered, with its relabeling table."""
    _require_tube(g, t)
    return _relabel(g, t)


def induced_subgraph(g: Graph, t: NodeSet) -> Graph:
    return restrict_graph(g, t).graph


def complement_embedding(g: Graph, t: NodeSet) -> Embedding:
    """The reconnected complement of a proper tube, with its relabeling table.

    Two surviving nodes are adjacent when they were adjacent in ``g`` or when
    both were adjacent to ``t``.
    """
    _require_tube(g, t)
    if t == g.all_nodes:
        raise PreconditionError("Reconnected complement of the universal tube is empty")
    return _relabel(g, g.all_nodes & ~t, g.neighbourhood(t))


def reconnected_complement(g: Graph, t: NodeSet) -> Graph:
    return complement_embedding(g, t).graph


def iterated_complement_embedding(g: Graph, ts: Iterable[NodeSet]) -> Embedding:
    """Fold the reconnected complement over pairwise-disjoint tubes of ``g``."""
    current = identity_embedding(g)
    removed = 0
    for t in ts:
        g.check_nodes(t)
        if t & removed:
            raise InputError(f"Tube {list(nodes_of(t))} overlaps an earlier tube of the sequence")
        step = complement_embedding(current.graph, current.push(t))
        current = current.then(step)
        removed |= t
    return current


def iterated_complement(g: Graph, ts: Iterable[NodeSet]) -> Graph:
    return iterated_complement_embedding(g, ts).graph


def linear(n: int) -> Graph:
    """The path L_n."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    """The complete graph K_n."""
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def cycle(n: int) -> Graph:
    """The cycle Cy_n (a path for n < 3)."""
    if n < 3:
        return linear(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def edgeless(n: int) -> Graph:
    """The graph C_n with n nodes and no edge."""
    return Graph.from_edges(n, [])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Ordered disjoint union; the nodes of later graphs are offset."""
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adjacency)
        offset += g.n
    return Graph(offset, tuple(adj))


def all_tubes(g: Graph) -> Iterator[NodeSet]:
    """Every tube of ``g`` in canonical order."""
    tubes = [m for m in range(1, 1 << g.n) if g.is_connected_set(m)]
    return iter(sorted(tubes, key=tube_key))


FAMILIES = {
    "linear": linear,
    "complete": complete,
    "cycle": cycle,
    "edgeless": edgeless,
}
