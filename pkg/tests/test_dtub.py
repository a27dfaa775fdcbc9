#!/usr/bin/env python3
"""Tests for tubings of disconnected graphs, the three products and the L-algebra."""

from __future__ import annotations

import unittest

from tests.test_base import tubing
from tubings.chains import boundary
from tubings.errors import InputError, PreconditionError
from tubings.graph import complete, linear
from tubings.dtub import (
    Component,
    DChain,
    DTubing,
    basis_element,
    basis_label,
    canonical_decompose,
    dashv,
    dchain_degree,
    def_count,
    degree,
    differential,
    differential_failures,
    enumerate_dtubings,
    evaluate,
    generator,
    join_graph,
    l_left,
    l_perp,
    l_right,
    lalgebra_failures,
    simplex_faces,
    split,
    times,
    trias_failures,
    trias_relation_check,
    vdash,
)
from tubings.tubing import enumerate_tubings, trivial_tubing
from tubings.types import DTubOp


POINT = trivial_tubing(complete(1))


def points(flags: str) -> DTubing:
    """Single-node components, 'R' for reduced and 'F' for full."""
    return DTubing(tuple(Component(POINT, f == "R") for f in flags))


class TestDTubing(unittest.TestCase):
    """Construction rules and grading."""

    def test_empty_rejected(self):
        with self.assertRaises(InputError):
            DTubing(())

    def test_single_reduced_component_rejected(self):
        with self.assertRaises(InputError):
            points("R")

    def test_all_full_rejected(self):
        """A disconnected graph cannot carry a universal tube."""
        with self.assertRaises(InputError):
            points("FF")

    def test_reduced_component_drops_universal_tube(self):
        T = tubing(complete(2), [1])
        D = DTubing((Component(T, True), Component(POINT, False)))
        self.assertEqual(D.tubes, (0b001, 0b100))
        self.assertEqual(D.graph.n, 3)
        self.assertEqual(D.flags(), "RF")

    def test_def_count_and_degree(self):
        self.assertEqual(def_count(generator(POINT)), 0)
        self.assertEqual(def_count(points("RF")), 1)
        self.assertEqual(def_count(points("RR")), 2)
        self.assertEqual(degree(points("RR")), 1)
        self.assertEqual(degree(points("RF")), 0)
        self.assertEqual(degree(generator(trivial_tubing(linear(3)))), 2)

    def test_simplex_faces(self):
        """2^n − 1 faces of the (n−1)-simplex."""
        for n in range(1, 7):
            self.assertEqual(len(simplex_faces(n)), 2 ** n - 1)

    def test_chain_degree(self):
        self.assertIsNone(dchain_degree(DChain.zero()))
        self.assertEqual(dchain_degree(DChain.single(points("RR"))), 1)
        with self.assertRaises(InputError):
            dchain_degree(DChain([(points("RR"), 1), (points("RF"), 1)]))


class TestProducts(unittest.TestCase):
    """⊢, ⊣ and × on disconnected tubings."""

    def test_interval_faces(self):
        x = generator(POINT)
        self.assertEqual(vdash(x, x), DChain.single(points("FR")))
        self.assertEqual(dashv(x, x), DChain.single(points("RF")))
        self.assertEqual(times(x, x), DChain.single(points("RR")))

    def test_vdash_offsets_right_factor(self):
        T = tubing(complete(2), [1])
        S = tubing(linear(3), [3])
        (D, c), = vdash(generator(T), generator(S)).terms
        self.assertEqual(c, 1)
        self.assertEqual(D.flags(), "FR")
        self.assertEqual(D.tubes, (0b00001, 0b00011, 0b10000))

    def test_zero_cases(self):
        x = generator(POINT)
        xy = points("RR")
        self.assertTrue(vdash(xy, x).is_zero())
        self.assertTrue(dashv(x, xy).is_zero())

    def test_relations_on_points(self):
        sample = [generator(POINT), points("RF"), points("FR"), points("RR")]
        self.assertTrue(trias_relation_check(sample))

    def test_relations_on_small_tubings(self):
        sample = [generator(T) for g in (complete(1), complete(2)) for T in enumerate_tubings(g)]
        self.assertEqual(list(trias_failures(sample)), [])


class TestDecomposition(unittest.TestCase):
    """The canonical right-comb decomposition."""

    def test_generator_does_not_split(self):
        with self.assertRaises(PreconditionError):
            split(generator(POINT))

    def test_two_components(self):
        self.assertEqual(canonical_decompose(points("FR")).op, DTubOp.VDASH)
        self.assertEqual(canonical_decompose(points("RF")).op, DTubOp.DASHV)
        self.assertEqual(canonical_decompose(points("RR")).op, DTubOp.TIMES)

    def test_full_reduced_full(self):
        expr = canonical_decompose(points("FRF"))
        self.assertEqual(expr.op, DTubOp.VDASH)
        self.assertEqual(expr.right.op, DTubOp.DASHV)

    def test_every_flag_pattern_replays(self):
        graphs = [complete(1), complete(2), complete(1), linear(2)]
        for r in (2, 3, 4):
            for D in enumerate_dtubings(graphs[:r]):
                self.assertEqual(evaluate(canonical_decompose(D)), D, D)

    def test_basis_label(self):
        for D in enumerate_dtubings([complete(1), complete(2), complete(1)]):
            reduced, tubings = basis_label(D)
            self.assertEqual(basis_element(reduced, tubings), D)


class TestDifferential(unittest.TestCase):
    """d on disconnected tubings."""

    def test_generator(self):
        T = trivial_tubing(complete(2))
        expected = DChain((generator(U), c) for U, c in boundary(T))
        self.assertEqual(differential(generator(T)), expected)

    def test_edge_of_interval(self):
        """d(∘ × ∘) = (∘, ⊚) − (⊚, ∘)."""
        expected = DChain([(points("RF"), 1), (points("FR"), -1)])
        self.assertEqual(differential(points("RR")), expected)

    def test_triangle(self):
        expected = DChain([(points("RRF"), -1), (points("RFR"), 1), (points("FRR"), -1)])
        self.assertEqual(differential(points("RRR")), expected)

    def test_vertex(self):
        self.assertTrue(differential(points("FR")).is_zero())

    def test_square_and_leibniz_rules(self):
        sample = simplex_faces(3) + [generator(T) for T in enumerate_tubings(complete(2))]
        self.assertEqual(list(differential_failures(sample)), [])


class TestLAlgebra(unittest.TestCase):
    """▷, ◁ and ⊥ on the joined graph."""

    def test_join_of_points(self):
        self.assertEqual(join_graph(POINT, POINT), linear(2))

    def test_join_of_segments(self):
        L2 = trivial_tubing(linear(2))
        self.assertEqual(join_graph(L2, L2), linear(4))

    def test_join_uses_free_nodes(self):
        """The last free node of {{2},t} on L_2 is node 1."""
        T = tubing(linear(2), [2])
        g = join_graph(T, POINT)
        self.assertTrue(g.has_edge(1, 3))
        self.assertFalse(g.has_edge(2, 3))

    def test_products_of_points(self):
        self.assertEqual(l_right(POINT, POINT), tubing(linear(2), [1]))
        self.assertEqual(l_left(POINT, POINT), tubing(linear(2), [2]))
        self.assertEqual(l_perp(POINT, POINT), trivial_tubing(linear(2)))

    def test_relations(self):
        sample = [T for g in (complete(1), complete(2)) for T in enumerate_tubings(g)]
        self.assertEqual(list(lalgebra_failures(sample)), [])


if __name__ == '__main__':
    unittest.main()
