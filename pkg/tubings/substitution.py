"""Substitution of tubings into tubes and reconnected complements.

``gamma_t`` inserts a tubing of the fiber graph of a tube ``t`` (the graph Γ_t
complemented by the maximal tubes of T inside ``t``), closing every inserted
tube under the maximal tubes it touches. ``gamma_full`` applies one such
substitution per labelled tube.
"""

from __future__ import annotations

import logging
from typing import NamedTuple, Sequence

from tubings.errors import InputError, PreconditionError
from tubings.graph import Embedding, Graph, NodeSet, complement_embedding, nodes_of, restrict_graph
from tubings.tubing import (
    Tubing,
    fiber_embedding,
    is_tubing,
    numbered_tubes,
)

logger = logging.getLogger(__name__)


class LabeledTubing(NamedTuple):
    """A tubing whose tubes carry labels t^0 = t_Γ, t^1, ..., t^k."""
    base: Tubing
    labels: tuple[NodeSet, ...]

    @classmethod
    def canonical(cls, T: Tubing) -> LabeledTubing:
        """Universal tube first, then proper tubes in canonical order."""
        return cls(T, (T.universal,) + T.proper_tubes)

    def validate(self) -> None:
        if not self.labels or self.labels[0] != self.base.universal:
            raise InputError("Label t^0 must be the universal tube")
        if sorted(self.labels) != sorted(self.base.tubes) or len(set(self.labels)) != len(self.labels):
            raise InputError("Labels must enumerate exactly the tubes of the tubing")


def _require_member(T: Tubing, t: NodeSet) -> None:
    if t not in T:
        raise PreconditionError(f"{list(nodes_of(t))} is not a tube of {T!r}")


def _checked(T: Tubing) -> Tubing:
    if __debug__ and not is_tubing(T.graph, T.tubes):
        raise PreconditionError(f"Substitution produced a non-tubing {T!r}")
    return T


def insert_in_tube(T: Tubing, t: NodeSet, S: Tubing) -> Tubing:
    """T ∘_t S: add the tubes of a tubing of Γ_t to T."""
    _require_member(T, t)
    emb = restrict_graph(T.graph, t)
    if S.graph != emb.graph:
        raise InputError(f"Expected a tubing of {emb.graph!r}, got one of {S.graph!r}")
    tubes = T.tubes + tuple(emb.pull(s) for s in S.tubes)
    if not is_tubing(T.graph, tubes):
        raise PreconditionError(f"{S!r} is not compatible with the tubes of T inside t")
    return Tubing(T.graph, tubes)


def lift_from_complement(g: Graph, emb: Embedding, t: NodeSet, s: NodeSet) -> NodeSet:
    """A tube of Γ_t* in Γ coordinates, joined to ``t`` when it touches ``t``."""
    p = emb.pull(s)
    return p | t if g.is_adjacent(p, t) else p


def insert_in_complement(T: Tubing, t: NodeSet, S: Tubing) -> Tubing:
    """T ◊ S: add a tubing of Γ_t*, absorbing ``t`` into the tubes linked to it."""
    _require_member(T, t)
    g = T.graph
    emb = complement_embedding(g, t)
    if S.graph != emb.graph:
        raise InputError(f"Expected a tubing of {emb.graph!r}, got one of {S.graph!r}")
    tubes = T.tubes + tuple(lift_from_complement(g, emb, t, s) for s in S.tubes)
    if not is_tubing(g, tubes):
        raise PreconditionError(f"{S!r} is not compatible with the tubing induced on Γ_t*")
    return Tubing(g, tubes)


def close_in_tube(T: Tubing, u: NodeSet, p: NodeSet) -> NodeSet:
    """``p`` joined with every maximal tube of T inside ``u`` that it touches."""
    out = p
    for m in T.maximal_subtubes(u):
        if T.graph.is_adjacent(p, m):
            out |= m
    return out


def tilde_closure(T: Tubing, s: NodeSet) -> NodeSet:
    """The minimal tube s̃ of Γ containing a tube ``s`` of Γ_T*."""
    emb = fiber_embedding(T, T.universal)
    emb.graph.check_nodes(s)
    return close_in_tube(T, T.universal, emb.pull(s))


def fiber_graph_of(T: Tubing, t: NodeSet) -> Graph:
    """The graph (Γ_t) complemented by Maxt(T|_t), receiving substitutions at ``t``."""
    _require_member(T, t)
    return fiber_embedding(T, t).graph


def gamma_t(T: Tubing, t: NodeSet, S: Tubing) -> Tubing:
    """The t-substitution of S in T."""
    _require_member(T, t)
    emb = fiber_embedding(T, t)
    if S.graph != emb.graph:
        raise InputError(
            f"Substitution at {list(nodes_of(t))} expects a tubing of {emb.graph!r}, "
            f"got one of {S.graph!r}"
        )
    added = tuple(close_in_tube(T, t, emb.pull(s)) for s in S.tubes)
    return _checked(T.with_tubes(added))


def gamma(T: Tubing, S: Tubing) -> Tubing:
    """Substitution at the universal tube."""
    return gamma_t(T, T.universal, S)


def gamma_full(T: LabeledTubing, arguments: Sequence[Tubing]) -> Tubing:
    """Substitute S^i at t^i for every label i, in label order."""
    T.validate()
    base = T.base
    if len(arguments) != len(T.labels):
        raise InputError(f"Expected {len(T.labels)} arguments, got {len(arguments)}")
    for i, (t, S) in enumerate(zip(T.labels, arguments)):
        expected = fiber_embedding(base, t).graph
        if S.graph != expected:
            raise InputError(f"Slot {i}: expected a tubing of {expected!r}, got one of {S.graph!r}")
    current = base
    for t, S in zip(T.labels, arguments):
        current = gamma_t(current, t, S)
    return current


def generator_decomposition(T: Tubing) -> tuple[NodeSet, ...]:
    """Proper tubes whose one-tube substitutions at the universal tube rebuild T."""
    return tuple(t for t in numbered_tubes(T) if t != T.universal)


def replay_generators(T0: Tubing, sequence: Sequence[NodeSet]) -> Tubing:
    """Apply γ_{t_Γ}(·, {u}) for each tube u, starting from ``T0``."""
    current = T0
    for u in sequence:
        emb = fiber_embedding(current, current.universal)
        s = emb.push(u)
        single = Tubing(emb.graph, (s, emb.graph.all_nodes))
        current = gamma(current, single)
        logger.debug(f"Inserted {list(nodes_of(u))}: {current!r}")
    return current

