#!/usr/bin/env python3
"""Tests for graphs, node sets and reconnected complements."""

from __future__ import annotations

import unittest

from tubings.errors import InputError, PreconditionError
from tubings.graph import (
    Graph,
    all_tubes,
    complement_embedding,
    complete,
    cycle,
    disjoint_union,
    edgeless,
    induced_subgraph,
    is_tube,
    iterated_complement,
    linear,
    min_node,
    nodes_of,
    nodeset,
    reconnected_complement,
    restrict_graph,
)


class TestNodeSets(unittest.TestCase):
    """Bitmask node sets."""

    def test_nodeset_and_back(self):
        """Node lists map to bitmasks and back in ascending order."""
        self.assertEqual(nodeset([1, 3]), 0b101)
        self.assertEqual(nodes_of(0b101), (1, 3))
        self.assertEqual(nodes_of(0), ())

    def test_nodeset_rejects_zero(self):
        """Nodes are 1-based."""
        with self.assertRaises(InputError):
            nodeset([0])

    def test_min_node_of_empty_set(self):
        with self.assertRaises(InputError):
            min_node(0)


class TestGraph(unittest.TestCase):
    """Graph construction and named families."""

    def test_from_edges_rejects_self_loop(self):
        """A loop is not a simple-graph edge."""
        with self.assertRaises(InputError):
            Graph.from_edges(3, [(1, 1)])

    def test_from_edges_rejects_out_of_range(self):
        with self.assertRaises(InputError):
            Graph.from_edges(3, [(1, 4)])

    def test_zero_nodes_rejected(self):
        with self.assertRaises(InputError):
            Graph.from_edges(0, [])

    def test_families(self):
        """Path, cycle, complete and edgeless graphs have the expected edges."""
        self.assertEqual(linear(3).edges, ((1, 2), (2, 3)))
        self.assertEqual(cycle(4).edges, ((1, 2), (1, 4), (2, 3), (3, 4)))
        self.assertEqual(len(complete(5).edges), 10)
        self.assertEqual(edgeless(3).edges, ())
        self.assertEqual(cycle(2), linear(2))

    def test_connectivity(self):
        self.assertTrue(linear(4).is_connected())
        self.assertFalse(edgeless(2).is_connected())
        self.assertTrue(edgeless(1).is_connected())

    def test_disjoint_union_offsets_later_graphs(self):
        g = disjoint_union([complete(2), linear(2)])
        self.assertEqual(g.n, 4)
        self.assertEqual(g.edges, ((1, 2), (3, 4)))

    def test_edges_are_symmetric(self):
        """Edges given in either order produce the same graph."""
        self.assertEqual(Graph.from_edges(2, [(2, 1)]), complete(2))


class TestTubes(unittest.TestCase):
    """Tubes and the graphs they cut out."""

    def test_is_tube(self):
        """A tube induces a connected subgraph."""
        self.assertFalse(is_tube(linear(3), nodeset([1, 3])))
        self.assertTrue(is_tube(complete(3), nodeset([1, 3])))
        self.assertFalse(is_tube(linear(3), 0))

    def test_is_tube_rejects_foreign_nodes(self):
        with self.assertRaises(InputError):
            is_tube(linear(3), nodeset([4]))

    def test_all_tubes_canonical_order(self):
        """Tubes come by smallest node, then size."""
        self.assertEqual(list(all_tubes(linear(3))), [0b001, 0b011, 0b111, 0b010, 0b110, 0b100])

    def test_restrict_graph(self):
        emb = restrict_graph(cycle(4), nodeset([2, 3, 4]))
        self.assertEqual(emb.graph, linear(3))
        self.assertEqual(emb.preimage, (2, 3, 4))

    def test_induced_subgraph_of_non_tube(self):
        with self.assertRaises(PreconditionError):
            induced_subgraph(linear(3), nodeset([1, 3]))

    def test_reconnected_complement_joins_neighbours(self):
        """Former neighbours of the removed tube become adjacent."""
        self.assertEqual(reconnected_complement(linear(3), nodeset([2])), complete(2))
        self.assertEqual(reconnected_complement(linear(4), nodeset([2])), linear(3))
        self.assertEqual(reconnected_complement(cycle(4), nodeset([1])), complete(3))

    def test_reconnected_complement_of_complete_graph(self):
        self.assertEqual(reconnected_complement(complete(6), nodeset([1, 3, 4, 6])), complete(2))

    def test_complement_embedding_tracks_nodes(self):
        emb = complement_embedding(linear(4), nodeset([2]))
        self.assertEqual(emb.preimage, (1, 3, 4))
        self.assertEqual(emb.pull(0b011), nodeset([1, 3]))
        self.assertEqual(emb.push(nodeset([2, 3, 4])), 0b110)

    def test_complement_of_universal_tube(self):
        with self.assertRaises(PreconditionError):
            reconnected_complement(linear(3), 0b111)

    def test_iterated_complement(self):
        """Removing two far-apart end nodes of L_4 leaves K_2."""
        g = iterated_complement(linear(4), [nodeset([1]), nodeset([4])])
        self.assertEqual(g, complete(2))

    def test_iterated_complement_rejects_overlap(self):
        with self.assertRaises(InputError):
            iterated_complement(linear(4), [nodeset([1, 2]), nodeset([2, 3])])


if __name__ == '__main__':
    unittest.main()
