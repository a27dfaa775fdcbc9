#!/usr/bin/env python3
"""Property tests on random connected graphs beyond the exhaustive census sizes."""

from __future__ import annotations

import unittest

from hypothesis import given, settings, strategies as st

from tubings.chains import boundary, boundary_chain, boundary_fiberwise
from tubings.dtub import differential, differential_chain, enumerate_dtubings
from tubings.graph import Graph, complete
from tubings.relations import substitution_associativity_case, substitution_commutation_failures
from tubings.substitution import generator_decomposition, replay_generators
from tubings.tubing import complement_by_maximal, covers, enumerate_tubings, trivial_tubing

PROPERTY_SETTINGS = settings(derandomize=True, deadline=None, max_examples=25)


@st.composite
def connected_graphs(draw, min_n: int = 3, max_n: int = 5) -> Graph:
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = {(draw(st.integers(min_value=1, max_value=v - 1)), v) for v in range(2, n + 1)}
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if (a, b) not in edges]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, sorted(edges | set(extra)))


@st.composite
def tubings_of(draw, graphs=None):
    g = draw(graphs if graphs is not None else connected_graphs())
    tubings = enumerate_tubings(g)
    return tubings[draw(st.integers(min_value=0, max_value=len(tubings) - 1))]


def _pick(draw, options):
    return options[draw(st.integers(min_value=0, max_value=len(options) - 1))]


@st.composite
def substitution_triples(draw):
    """T, then S on the fiber of its universal tube, then R on the fiber of S."""
    T = draw(tubings_of(connected_graphs(min_n=5, max_n=6)))
    S = _pick(draw, enumerate_tubings(complement_by_maximal(T).graph))
    R = _pick(draw, enumerate_tubings(complement_by_maximal(S).graph))
    return T, S, R


class TestBoundaryProperties(unittest.TestCase):

    @PROPERTY_SETTINGS
    @given(T=tubings_of())
    def test_support_is_covers(self, T):
        d = boundary(T)
        self.assertEqual(set(d.keys()), set(covers(T)))
        self.assertTrue(all(c in (1, -1) for _, c in d))

    @PROPERTY_SETTINGS
    @given(T=tubings_of())
    def test_square_is_zero(self, T):
        self.assertTrue(boundary_chain(boundary(T)).is_zero())

    @PROPERTY_SETTINGS
    @given(T=tubings_of())
    def test_fiberwise_formula(self, T):
        self.assertEqual(boundary_fiberwise(T), boundary(T))


class TestSubstitutionProperties(unittest.TestCase):

    @PROPERTY_SETTINGS
    @given(triple=substitution_triples())
    def test_associativity(self, triple):
        self.assertIsNone(substitution_associativity_case(*triple))

    @settings(derandomize=True, deadline=None, max_examples=10)
    @given(T=tubings_of(connected_graphs(min_n=4, max_n=5)))
    def test_commutation(self, T):
        self.assertEqual(list(substitution_commutation_failures(T.graph, [T])), [])

    @PROPERTY_SETTINGS
    @given(T=tubings_of(connected_graphs(min_n=5, max_n=6)))
    def test_generator_replay(self, T):
        self.assertEqual(replay_generators(trivial_tubing(T.graph), generator_decomposition(T)), T)


class TestDTubProperties(unittest.TestCase):

    @PROPERTY_SETTINGS
    @given(shape=st.lists(st.integers(min_value=1, max_value=3), min_size=2, max_size=2), data=st.data())
    def test_differential_squares_to_zero(self, shape, data):
        elements = list(enumerate_dtubings([complete(n) for n in shape]))
        x = data.draw(st.sampled_from(elements))
        self.assertTrue(differential_chain(differential(x)).is_zero())


if __name__ == '__main__':
    unittest.main()
