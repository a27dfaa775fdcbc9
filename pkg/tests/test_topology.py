#!/usr/bin/env python3
"""Tests for tubings viewed as bases of finite topologies."""

from __future__ import annotations

import unittest

from tests.test_base import masks, tubing
from tubings.errors import CapExceededError, PreconditionError
from tubings.graph import complete, cycle, linear, nodeset
from tubings.topology import (
    generated_topology,
    is_topological_basis,
    path_connected_edges,
    refines,
    satisfies_connectivity_condition,
    separated,
    tubing_iff_basis_check,
)
from tubings.tubing import covers, enumerate_tubings, trivial_tubing


class TestGeneratedTopology(unittest.TestCase):

    def test_opens_of_vertex(self):
        """{{1},{3},t} on L_3 generates five open sets."""
        T = tubing(linear(3), [1], [3])
        self.assertEqual(generated_topology(T), frozenset({0} | masks([1], [3], [1, 3], [1, 2, 3])))

    def test_trivial_topology(self):
        self.assertEqual(generated_topology(trivial_tubing(linear(3))), frozenset({0, 0b111}))

    def test_refinement_along_covers(self):
        """Adding a tube gives a finer topology."""
        for T in enumerate_tubings(cycle(4)):
            for U in covers(T):
                self.assertTrue(refines(U, T))
                self.assertFalse(refines(T, U))


class TestBasis(unittest.TestCase):

    def test_basis_needs_cover(self):
        self.assertFalse(is_topological_basis(0b111, masks([1], [3])))

    def test_overlap_must_be_union(self):
        """{1,2} ∩ {2,3} = {2} is not a union of members."""
        self.assertFalse(is_topological_basis(0b111, masks([1, 2], [2, 3])))
        self.assertTrue(is_topological_basis(0b111, masks([1, 2], [2, 3], [2])))

    def test_separated(self):
        self.assertTrue(separated(masks([1], [2], [1, 2]), 1, 2))
        self.assertFalse(separated(masks([1], [1, 2]), 1, 2))

    def test_linked_family_fails_condition(self):
        """{1}, {2} on L_3 separate the edge 1-2."""
        self.assertFalse(satisfies_connectivity_condition(linear(3), masks([1], [2], [1, 2, 3])))

    def test_condition_needs_basis(self):
        with self.assertRaises(PreconditionError):
            satisfies_connectivity_condition(linear(3), masks([1, 2], [2, 3]))

    def test_condition_uses_reconnected_complements(self):
        """Edges of L_3 stay connected, but removing {2} joins 1 and 3, which are separated."""
        family = masks([2], [1, 2], [2, 3], [1, 2, 3])
        self.assertTrue(is_topological_basis(0b111, family))
        self.assertFalse(any(separated(family, v, w) for v, w in linear(3).edges))
        self.assertFalse(satisfies_connectivity_condition(linear(3), family))

    def test_tubings_keep_edges_connected(self):
        for T in enumerate_tubings(complete(3)):
            self.assertTrue(path_connected_edges(T))


class TestEquivalence(unittest.TestCase):
    """Tubing ⟺ basis with the connectivity condition, over every tube family."""

    def test_small_graphs(self):
        for g in (complete(1), linear(2), linear(3), complete(3), cycle(4), linear(4)):
            self.assertTrue(tubing_iff_basis_check(g), g)

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            tubing_iff_basis_check(linear(5))


if __name__ == '__main__':
    unittest.main()
