"""Tubings as bases of finite topologies.

A family of tubes is a tubing exactly when it is a topological basis on the
nodes whose two-point subspaces over the edges of Γ, and of the reconnected
complements Γ_t*, are connected.
"""

from __future__ import annotations

from itertools import combinations
import logging
from typing import Iterable

from tubings.errors import CapExceededError, PreconditionError
from tubings.graph import Graph, NodeSet, all_tubes, complement_embedding, is_tube, nodes_of
from tubings.tubing import Tubing, is_tubing

logger = logging.getLogger(__name__)

TOPOLOGY_CAP = 4


def generated_topology(T: Tubing | Iterable[NodeSet]) -> frozenset[NodeSet]:
    """All unions of subfamilies of the basis, including the empty set."""
    basis = T.tubes if isinstance(T, Tubing) else tuple(T)
    opens = {0}
    for b in basis:
        opens |= {o | b for o in opens}
    return frozenset(opens)


def is_topological_basis(universe: NodeSet, basis: Iterable[NodeSet]) -> bool:
    """Covers the universe, and each pairwise intersection is a union of members."""
    family = list(set(basis))
    covered = 0
    for b in family:
        covered |= b
    if covered != universe:
        return False
    for b1, b2 in combinations(family, 2):
        meet = b1 & b2
        if not meet:
            continue
        union = 0
        for b3 in family:
            if b3 & ~meet == 0:
                union |= b3
        if union != meet:
            return False
    return True


def separated(basis: Iterable[NodeSet], v: int, w: int) -> bool:
    """True when both points of {v, w} are open in the subspace topology."""
    bv, bw = 1 << (v - 1), 1 << (w - 1)
    family = list(basis)
    return (any(b & bv and not b & bw for b in family)
            and any(b & bw and not b & bv for b in family))


def _condition_edges(g: Graph, basis: Iterable[NodeSet]) -> set[tuple[int, int]]:
    edges = set(g.edges)
    for t in basis:
        if t == g.all_nodes:
            continue
        emb = complement_embedding(g, t)
        for a, b in emb.graph.edges:
            edges.add((emb.preimage[a - 1], emb.preimage[b - 1]))
    return edges


def satisfies_connectivity_condition(g: Graph, basis: Iterable[NodeSet]) -> bool:
    """Every edge of Γ and of each Γ_t* spans a connected two-point subspace."""
    family = list(set(basis))
    for t in family:
        if not is_tube(g, t):
            raise PreconditionError(f"{list(nodes_of(t))} is not a tube of {g!r}")
    if not is_topological_basis(g.all_nodes, family):
        raise PreconditionError("Family is not a topological basis on the nodes")
    return not any(separated(family, v, w) for v, w in _condition_edges(g, family))


def tubing_iff_basis_check(g: Graph) -> bool:
    """Exhaustively confirm: tubing ⟺ topological basis with the connectivity condition."""
    if g.n > TOPOLOGY_CAP:
        raise CapExceededError("topology check node count", g.n, TOPOLOGY_CAP)
    tubes = list(all_tubes(g))
    checked = 0
    for bits in range(1 << len(tubes)):
        family = [t for i, t in enumerate(tubes) if bits >> i & 1]
        left = is_tubing(g, family)
        right = (is_topological_basis(g.all_nodes, family)
                 and satisfies_connectivity_condition(g, family))
        checked += 1
        if left != right:
            logger.debug(f"Topology equivalence fails on {[list(nodes_of(t)) for t in family]}")
            return False
    logger.debug(f"Topology equivalence held on {checked} families of {g!r}")
    return True


def path_connected_edges(T: Tubing) -> bool:
    """Each edge of Γ spans a connected subspace of the topology generated by T."""
    return not any(separated(T.tubes, v, w) for v, w in T.graph.edges)


def refines(T: Tubing, U: Tubing) -> bool:
    """The topology of T contains the topology of U."""
    return generated_topology(U) <= generated_topology(T)
