#!/usr/bin/env python3
"""Tests for the exhaustive relation checkers."""

from __future__ import annotations

import unittest

from tests.test_base import tubing
from tubings.chains import TubingChain, sigma_t
from tubings.graph import complement_embedding, complete, cycle, linear, nodeset
from tubings.relations import (
    alpha_antisymmetry_failures,
    circ_relation_check,
    edge_signature,
    full_signature,
    leibniz_independence_check,
    ns_compose,
    ns_operad_relation_check,
    permutad_relation_check,
    restriction_commutes_failures,
    signature_cocycle_failures,
    signature_cocycle_report,
    substitution_associativity_failures,
    substitution_commutation_failures,
)
from tubings.tubing import trivial_tubing


class TestCompositionRelations(unittest.TestCase):
    """Disjoint and nested relations of ∘_(Γ,t)."""

    def test_small_graphs(self):
        for g in (linear(3), complete(3), cycle(4), linear(4)):
            self.assertTrue(circ_relation_check(g), g)

    def test_boundary_independent_of_tube(self):
        for g in (linear(4), cycle(4), complete(4)):
            self.assertTrue(leibniz_independence_check(g), g)


class TestOperadRelations(unittest.TestCase):
    """Non-symmetric operad on paths, permutad on complete graphs."""

    def test_ns_compose_two_points(self):
        point = trivial_tubing(linear(1))
        self.assertEqual(ns_compose(point, 0, point), TubingChain.single(tubing(linear(2), [1])))

    def test_ns_operad(self):
        self.assertTrue(ns_operad_relation_check(1, 1, 1))
        self.assertTrue(ns_operad_relation_check(2, 2, 2))
        self.assertTrue(ns_operad_relation_check(2, 1, 3))

    def test_permutad(self):
        self.assertTrue(permutad_relation_check(1, 1, 1))
        self.assertTrue(permutad_relation_check(2, 2, 2))


class TestSignatures(unittest.TestCase):
    """Cocycle identities of the edge and full signatures."""

    def test_full_signature_is_a_cocycle(self):
        for g in (linear(3), linear(4), cycle(4), complete(4)):
            self.assertEqual(signature_cocycle_report(g, full_signature),
                             {"disjoint": True, "nested": True}, g)

    def test_far_apart_orders_differ_by_block_swap(self):
        """On L_3 removing {1} then {3} and {3} then {1} differ by the swap of the two blocks."""
        g = linear(3)
        t, u = nodeset([1]), nodeset([3])
        ct, cu = complement_embedding(g, t), complement_embedding(g, u)
        left = full_signature(g, sigma_t(g, t)) * full_signature(ct.graph, sigma_t(ct.graph, ct.push(u)))
        right = full_signature(g, sigma_t(g, u)) * full_signature(cu.graph, sigma_t(cu.graph, cu.push(t)))
        self.assertEqual(left, -right)
        self.assertEqual(list(signature_cocycle_failures(g, full_signature)), [])

    def test_edge_signature_fails_nested_identity(self):
        """On L_3 the pair {2,3} ⊃ {2} breaks the nested identity."""
        self.assertEqual(signature_cocycle_report(linear(3), edge_signature),
                         {"disjoint": True, "nested": False})

    def test_alpha_antisymmetry(self):
        for g in (linear(4), cycle(4), complete(4)):
            self.assertEqual(list(alpha_antisymmetry_failures(g)), [], g)


class TestSubstitutionRelations(unittest.TestCase):
    """Commutation, associativity and restriction of γ."""

    def test_commutation(self):
        for g in (linear(3), complete(3), cycle(4)):
            self.assertEqual(list(substitution_commutation_failures(g)), [], g)

    def test_associativity(self):
        for g in (linear(3), complete(3), cycle(4)):
            self.assertEqual(list(substitution_associativity_failures(g)), [], g)

    def test_restriction_to_path(self):
        self.assertEqual(list(restriction_commutes_failures(3, [linear(3)])), [])


if __name__ == '__main__':
    unittest.main()
