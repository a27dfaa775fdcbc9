"""Exhaustive checkers for the identities satisfied by ∂, ∘, Δ• and γ.

Every checker comes in two forms: ``*_failures`` yields a ``CaseFailure`` per
violated case (with a JSON-ready counterexample), ``*_check`` returns a bool.
"""

from __future__ import annotations

from itertools import product
import logging
from typing import Callable, Iterator, Sequence

from tubings.chains import (
    SignedPermutation,
    TubingChain,
    alpha,
    boundary,
    boundary_chain,
    boundary_fiberwise,
    boundary_recursive,
    circ_chains,
    circ_signed,
    coassociator,
    graph_signature,
    permutation_sign,
    sigma_t,
    swap_first_two,
)
from tubings.errors import TubingError
from tubings.graph import (
    Graph,
    NodeSet,
    all_tubes,
    complement_embedding,
    complete,
    iterated_complement,
    linear,
    nodes_of,
    restrict_graph,
    size,
)
from tubings.serialization import encode_chain, encode_coproduct, encode_graph, encode_tubes, encode_tubing
from tubings.substitution import gamma, gamma_t, generator_decomposition, replay_generators
from tubings.tubing import (
    Tubing,
    complement_by_maximal,
    covers,
    enumerate_tubings,
    fiber_embedding,
    restriction_map,
    trivial_tubing,
)
from tubings.types import CaseFailure

logger = logging.getLogger(__name__)

Signature = Callable[[Graph, SignedPermutation], int]


def holds(failures: Iterator[CaseFailure]) -> bool:
    """True when the iterator yields no failure; logs the first one otherwise."""
    first = next(failures, None)
    if first is not None:
        logger.debug(f"Counterexample {first.case}: {first.detail}")
    return first is None


def _proper_tubes(g: Graph) -> list[NodeSet]:
    return [t for t in all_tubes(g) if t != g.all_nodes]


def _far_apart_pairs(g: Graph) -> Iterator[tuple[NodeSet, NodeSet]]:
    tubes = _proper_tubes(g)
    for t in tubes:
        for u in tubes:
            if t != u and not t & u and not g.is_adjacent(t, u):
                yield t, u


def _nested_pairs(g: Graph) -> Iterator[tuple[NodeSet, NodeSet]]:
    """(t, t′) with t′ a tube strictly inside the proper tube t."""
    tubes = _proper_tubes(g)
    for t in tubes:
        for u in tubes:
            if u != t and u & ~t == 0:
                yield t, u


def d2_failures(g: Graph) -> Iterator[CaseFailure]:
    """∂∂T = 0 for every tubing T."""
    for T in enumerate_tubings(g):
        dd = boundary_chain(boundary(T))
        if dd:
            yield CaseFailure(f"d2 {T!r}", {"tubing": encode_tubing(T), "boundarySquared": encode_chain(dd)})


def leibniz_independence_failures(g: Graph) -> Iterator[CaseFailure]:
    """∂T does not depend on the decomposition tube, matches the fiberwise sum and the covers."""
    for T in enumerate_tubings(g):
        reference = boundary(T)
        support = set(reference.keys())
        if support != set(covers(T)) or any(abs(c) != 1 for _, c in reference):
            yield CaseFailure(f"support {T!r}", {"tubing": encode_tubing(T), "boundary": encode_chain(reference)})
            continue
        fiberwise = boundary_fiberwise(T)
        if fiberwise != reference:
            yield CaseFailure(f"fiberwise {T!r}", {
                "tubing": encode_tubing(T),
                "recursive": encode_chain(reference),
                "fiberwise": encode_chain(fiberwise),
            })
        for t in T.proper_tubes:
            other = boundary_recursive(T, t)
            if other != reference:
                yield CaseFailure(f"leibniz {T!r} at {list(nodes_of(t))}", {
                    "tubing": encode_tubing(T),
                    "tube": list(nodes_of(t)),
                    "expected": encode_chain(reference),
                    "actual": encode_chain(other),
                })


def prelie_failures(g: Graph) -> Iterator[CaseFailure]:
    """The coassociator of Δ• is symmetric in its first two factors."""
    for T in enumerate_tubings(g):
        a = coassociator(T)
        b = swap_first_two(a)
        if a != b:
            yield CaseFailure(f"prelie {T!r}", {
                "tubing": encode_tubing(T),
                "coassociator": encode_coproduct(a),
                "swapped": encode_coproduct(b),
            })


def prelie_identity_check(g: Graph) -> bool:
    return holds(prelie_failures(g))


def d2_check(g: Graph) -> bool:
    return holds(d2_failures(g))


def leibniz_independence_check(g: Graph) -> bool:
    return holds(leibniz_independence_failures(g))


def _single(T: Tubing) -> TubingChain:
    return TubingChain.single(T)


def circ_relation_failures(g: Graph) -> Iterator[CaseFailure]:
    """Disjoint and nested relations between two signed compositions."""
    for t, u in _far_apart_pairs(g):
        outer_t = complement_embedding(g, t)
        outer_u = complement_embedding(g, u)
        rest = iterated_complement(g, (t, u))
        for T1, T2, S in product(enumerate_tubings(restrict_graph(g, t).graph),
                                 enumerate_tubings(restrict_graph(g, u).graph),
                                 enumerate_tubings(rest)):
            inner_left = circ_signed(T2, S, outer_t.graph, outer_t.push(u))
            left = circ_chains(_single(T1), inner_left, g, t)
            inner_right = circ_signed(T1, S, outer_u.graph, outer_u.push(t))
            right = circ_chains(_single(T2), inner_right, g, u)
            right = (-1) ** (T1.dimension * T2.dimension) * right
            if left != right:
                yield CaseFailure(f"disjoint {list(nodes_of(t))} {list(nodes_of(u))}", {
                    "graph": encode_graph(g), "tubes": encode_tubes((t, u)),
                    "left": encode_chain(left), "right": encode_chain(right),
                })
    for t, u in _nested_pairs(g):
        inner = restrict_graph(g, t)
        outer_u = complement_embedding(g, u)
        middle = complement_embedding(inner.graph, inner.push(u)).graph
        for T2, T1, S in product(enumerate_tubings(restrict_graph(g, u).graph),
                                 enumerate_tubings(middle),
                                 enumerate_tubings(complement_embedding(g, t).graph)):
            left = circ_chains(circ_signed(T2, T1, inner.graph, inner.push(u)), _single(S), g, t)
            right = circ_chains(_single(T2), circ_signed(T1, S, outer_u.graph, outer_u.push(t)), g, u)
            if left != right:
                yield CaseFailure(f"nested {list(nodes_of(t))} ⊃ {list(nodes_of(u))}", {
                    "graph": encode_graph(g), "tubes": encode_tubes((t, u)),
                    "left": encode_chain(left), "right": encode_chain(right),
                })


def circ_relation_check(g: Graph) -> bool:
    return holds(circ_relation_failures(g))


def _interval(i: int, m: int) -> NodeSet:
    return ((1 << m) - 1) << i


def ns_compose(x: Tubing, i: int, y: Tubing) -> TubingChain:
    """x ∘_i y: insert y on the nodes i+1..i+|y| of L_{|x|+|y|}."""
    n, m = x.graph.n, y.graph.n
    return circ_signed(y, x, linear(n + m), _interval(i, m))


def _ns_compose_chains(xs: TubingChain, i: int, ys: TubingChain) -> TubingChain:
    out = []
    for x, a in xs:
        for y, b in ys:
            out.extend((T, a * b * c) for T, c in ns_compose(x, i, y))
    return TubingChain(out)


def ns_operad_failures(n: int, m: int, p: int) -> Iterator[CaseFailure]:
    """Sequential and parallel composition relations on linear graphs."""
    for x, y, z in product(enumerate_tubings(linear(n)), enumerate_tubings(linear(m)),
                           enumerate_tubings(linear(p))):
        for i in range(n + 1):
            xy = ns_compose(x, i, y)
            for j in range(i + m + 1, n + m + 1):
                left = _ns_compose_chains(xy, j, _single(z))
                right = _ns_compose_chains(ns_compose(x, j - m, z), i, _single(y))
                right = (-1) ** (y.dimension * z.dimension) * right
                if left != right:
                    yield CaseFailure(f"parallel i={i} j={j}", {
                        "x": encode_tubing(x), "y": encode_tubing(y), "z": encode_tubing(z),
                        "left": encode_chain(left), "right": encode_chain(right),
                    })
            for j in range(m + 1):
                left = _ns_compose_chains(_single(x), i, ns_compose(y, j, z))
                right = _ns_compose_chains(xy, i + j, _single(z))
                if left != right:
                    yield CaseFailure(f"sequential i={i} j={j}", {
                        "x": encode_tubing(x), "y": encode_tubing(y), "z": encode_tubing(z),
                        "left": encode_chain(left), "right": encode_chain(right),
                    })


def ns_operad_relation_check(n: int, m: int, p: int) -> bool:
    return holds(ns_operad_failures(n, m, p))


def _block_permutation(outer: Sequence[int], inner: Sequence[int], offset: int) -> tuple[int, ...]:
    """outer · (1_offset × inner) when offset > 0, else outer · (inner × 1)."""
    out = list(outer)
    for k, v in enumerate(inner):
        out[offset + k] = outer[offset + v - 1]
    return tuple(out)


def permutad_failures(n: int, m: int, p: int) -> Iterator[CaseFailure]:
    """(x ∘_σ y) ∘_τ z = x ∘_δ (y ∘_γ z) on complete graphs, shuffles included."""
    N = n + m + p
    big = complete(N)
    for t, u in _nested_pairs(big):
        if size(t) != m + p or size(u) != p:
            continue
        outer_u = complement_embedding(big, u)
        t_tilde = outer_u.push(t)
        inner = restrict_graph(big, t)
        u_in_t = inner.push(u)
        tau = sigma_t(big, u).sigma
        sigma = sigma_t(outer_u.graph, t_tilde).sigma
        delta = sigma_t(big, t).sigma
        gamma_shuffle = sigma_t(inner.graph, u_in_t).sigma
        lhs_perm = _block_permutation(tau, sigma, p)
        rhs_perm = _block_permutation(delta, gamma_shuffle, 0)
        if lhs_perm != rhs_perm:
            yield CaseFailure(f"shuffle {list(nodes_of(t))} ⊃ {list(nodes_of(u))}", {
                "left": list(lhs_perm), "right": list(rhs_perm),
            })
            continue
        for x, y, z in product(enumerate_tubings(complete(n)), enumerate_tubings(complete(m)),
                               enumerate_tubings(complete(p))):
            left = circ_chains(_single(z), circ_signed(y, x, outer_u.graph, t_tilde), big, u)
            right = circ_chains(circ_signed(z, y, inner.graph, u_in_t), _single(x), big, t)
            if left != right:
                yield CaseFailure(f"permutad {list(nodes_of(t))} ⊃ {list(nodes_of(u))}", {
                    "x": encode_tubing(x), "y": encode_tubing(y), "z": encode_tubing(z),
                    "left": encode_chain(left), "right": encode_chain(right),
                })


def permutad_relation_check(n: int, m: int, p: int) -> bool:
    return holds(permutad_failures(n, m, p))


def edge_signature(g: Graph, sigma: SignedPermutation) -> int:
    return graph_signature(g, sigma)


def full_signature(g: Graph, sigma: SignedPermutation) -> int:
    return permutation_sign(sigma)


def _block_swap_sign(g: Graph, signature: Signature, t: NodeSet, u: NodeSet) -> int:
    """Ratio of ``signature`` on (t, u, rest) and on (u, t, rest)."""
    rest = nodes_of(g.all_nodes & ~(t | u))
    tu = SignedPermutation(nodes_of(t) + nodes_of(u) + rest, g)
    ut = SignedPermutation(nodes_of(u) + nodes_of(t) + rest, g)
    return signature(g, tu) * signature(g, ut)


def signature_cocycle_failures(g: Graph, signature: Signature) -> Iterator[CaseFailure]:
    """The two cocycle identities of a signature over pairs of tubes of ``g``.

    For far-apart tubes the two orders of removal agree up to the sign of
    exchanging the blocks t and u; for nested tubes they agree exactly.
    """
    for t, u in _far_apart_pairs(g):
        ct, cu = complement_embedding(g, t), complement_embedding(g, u)
        left = signature(g, sigma_t(g, t)) * signature(ct.graph, sigma_t(ct.graph, ct.push(u)))
        right = signature(g, sigma_t(g, u)) * signature(cu.graph, sigma_t(cu.graph, cu.push(t)))
        twist = _block_swap_sign(g, signature, t, u)
        if left != twist * right:
            yield CaseFailure(f"disjoint {list(nodes_of(t))} {list(nodes_of(u))}",
                              {"graph": encode_graph(g), "tubes": encode_tubes((t, u)),
                               "left": left, "right": right, "twist": twist})
    for t, u in _nested_pairs(g):
        inner = restrict_graph(g, t)
        cu = complement_embedding(g, u)
        left = signature(g, sigma_t(g, t)) * signature(inner.graph, sigma_t(inner.graph, inner.push(u)))
        right = signature(g, sigma_t(g, u)) * signature(cu.graph, sigma_t(cu.graph, cu.push(t & ~u)))
        if left != right:
            yield CaseFailure(f"nested {list(nodes_of(t))} ⊃ {list(nodes_of(u))}",
                              {"graph": encode_graph(g), "tubes": encode_tubes((t, u)),
                               "left": left, "right": right})


def signature_cocycle_report(g: Graph, signature: Signature) -> dict[str, bool]:
    """Which of the disjoint and nested cocycle identities hold on ``g``."""
    failures = list(signature_cocycle_failures(g, signature))
    return {
        "disjoint": not any(f.case.startswith("disjoint") for f in failures),
        "nested": not any(f.case.startswith("nested") for f in failures),
    }


def alpha_antisymmetry_failures(g: Graph) -> Iterator[CaseFailure]:
    """α(t, {t′}) = −α(t′, {t}) for far-apart tubes."""
    for t, u in _far_apart_pairs(g):
        ct, cu = complement_embedding(g, t), complement_embedding(g, u)
        a = alpha(g, t, Tubing(ct.graph, (ct.push(u), ct.graph.all_nodes)))
        b = alpha(g, u, Tubing(cu.graph, (cu.push(t), cu.graph.all_nodes)))
        if a != -b:
            yield CaseFailure(f"alpha {list(nodes_of(t))} {list(nodes_of(u))}",
                              {"graph": encode_graph(g), "tubes": encode_tubes((t, u)), "values": [a, b]})


def _attempt(f: Callable[[], Tubing]) -> Tubing | str:
    try:
        return f()
    except TubingError as e:
        return str(e)


def substitution_commutation_failures(g: Graph, tubings: Sequence[Tubing] | None = None) -> Iterator[CaseFailure]:
    """Substitutions at two different tubes of T commute."""
    for T in tubings if tubings is not None else enumerate_tubings(g):
        for t, u in product(T.tubes, T.tubes):
            if t >= u:
                continue
            for S, R in product(enumerate_tubings(fiber_embedding(T, t).graph),
                                enumerate_tubings(fiber_embedding(T, u).graph)):
                left = _attempt(lambda: gamma_t(gamma_t(T, t, S), u, R))
                right = _attempt(lambda: gamma_t(gamma_t(T, u, R), t, S))
                if left != right or isinstance(left, str):
                    yield CaseFailure(f"commute {T!r} at {list(nodes_of(t))}, {list(nodes_of(u))}", {
                        "tubing": encode_tubing(T), "tubes": encode_tubes((t, u)),
                        "arguments": [encode_tubing(S), encode_tubing(R)],
                        "left": left if isinstance(left, str) else encode_tubing(left),
                        "right": right if isinstance(right, str) else encode_tubing(right),
                    })


def substitution_associativity_case(T: Tubing, S: Tubing, R: Tubing) -> CaseFailure | None:
    """γ(γ(T; S); R) = γ(T; γ(S; R)) for R a tubing of the complement of S."""
    U = gamma(T, S)
    if complement_by_maximal(U).graph != complement_by_maximal(S).graph:
        return CaseFailure(f"associativity graphs {T!r} {S!r}", {
            "tubing": encode_tubing(T), "argument": encode_tubing(S),
            "expected": encode_graph(complement_by_maximal(S).graph),
            "actual": encode_graph(complement_by_maximal(U).graph),
        })
    left = _attempt(lambda: gamma(U, R))
    right = _attempt(lambda: gamma(T, gamma(S, R)))
    if left != right or isinstance(left, str):
        return CaseFailure(f"associativity {T!r} {S!r} {R!r}", {
            "tubing": encode_tubing(T),
            "arguments": [encode_tubing(S), encode_tubing(R)],
            "left": left if isinstance(left, str) else encode_tubing(left),
            "right": right if isinstance(right, str) else encode_tubing(right),
        })
    return None


def substitution_associativity_failures(g: Graph) -> Iterator[CaseFailure]:
    for T in enumerate_tubings(g):
        for S in enumerate_tubings(complement_by_maximal(T).graph):
            for R in enumerate_tubings(complement_by_maximal(S).graph):
                failure = substitution_associativity_case(T, S, R)
                if failure is not None:
                    yield failure


def restriction_commutes_failures(n: int, omegas: Sequence[Graph]) -> Iterator[CaseFailure]:
    """Restricting γ(T; S) from K_n to Ω equals substituting the restrictions."""
    gk = complete(n)
    for omega in omegas:
        for T in enumerate_tubings(gk):
            T_hat = restriction_map(T, omega)
            omega_fiber = complement_by_maximal(T_hat).graph
            for S in enumerate_tubings(complement_by_maximal(T).graph):
                left = _attempt(lambda: restriction_map(gamma(T, S), omega))
                right = _attempt(lambda: gamma(T_hat, restriction_map(S, omega_fiber)))
                if left != right or isinstance(left, str):
                    yield CaseFailure(f"restriction {T!r} {S!r} to {omega!r}", {
                        "tubing": encode_tubing(T), "argument": encode_tubing(S),
                        "omega": encode_graph(omega),
                        "left": left if isinstance(left, str) else encode_tubing(left),
                        "right": right if isinstance(right, str) else encode_tubing(right),
                    })


def generator_failures(g: Graph) -> Iterator[CaseFailure]:
    """Replaying the generator decomposition rebuilds every tubing."""
    start = trivial_tubing(g)
    for T in enumerate_tubings(g):
        sequence = generator_decomposition(T)
        rebuilt = _attempt(lambda: replay_generators(start, sequence))
        if rebuilt != T:
            yield CaseFailure(f"generators {T!r}", {
                "tubing": encode_tubing(T), "sequence": encode_tubes(sequence),
                "rebuilt": rebuilt if isinstance(rebuilt, str) else encode_tubing(rebuilt),
            })

