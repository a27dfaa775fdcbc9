#!/usr/bin/env python3
"""Cross-checks of graph primitives against networkx."""

from __future__ import annotations

from itertools import combinations
import unittest

import networkx as nx

from tubings.census import graph_census, graphs_with_nodes
from tubings.graph import Graph, all_tubes, complement_embedding, complete, cycle, is_tube, linear, nodes_of


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    return h


def reconnected_nx(g: Graph, t: int) -> nx.Graph:
    """Delete the nodes of t and join every pair of its former neighbours."""
    h = to_nx(g)
    removed = set(nodes_of(t))
    neighbours = {w for v in removed for w in h.neighbors(v)} - removed
    h.remove_nodes_from(removed)
    h.add_edges_from(combinations(sorted(neighbours), 2))
    return h


class TestAgainstNetworkx(unittest.TestCase):

    def test_is_tube_is_connected_subgraph(self):
        for g in (linear(4), cycle(5), complete(4)):
            h = to_nx(g)
            for size in range(1, g.n + 1):
                for nodes in combinations(range(1, g.n + 1), size):
                    mask = sum(1 << (v - 1) for v in nodes)
                    self.assertEqual(is_tube(g, mask), nx.is_connected(h.subgraph(nodes)), nodes)

    def test_all_tubes_count(self):
        for g in graph_census(4):
            h = to_nx(g)
            expected = sum(1 for size in range(1, g.n + 1)
                           for nodes in combinations(h.nodes, size)
                           if nx.is_connected(h.subgraph(nodes)))
            self.assertEqual(len(list(all_tubes(g))), expected)

    def test_census_counts_connected_graphs(self):
        """Every labeled graph on four nodes, filtered by networkx."""
        pairs = list(combinations(range(1, 5), 2))
        connected = 0
        for bits in range(1 << len(pairs)):
            h = nx.Graph()
            h.add_nodes_from(range(1, 5))
            h.add_edges_from(p for k, p in enumerate(pairs) if bits >> k & 1)
            connected += nx.is_connected(h)
        self.assertEqual(len(list(graphs_with_nodes(4))), connected)

    def test_reconnected_complement(self):
        for g in graph_census(4, min_n=3):
            for t in all_tubes(g):
                if t == g.all_nodes:
                    continue
                emb = complement_embedding(g, t)
                expected = reconnected_nx(g, t)
                actual = nx.relabel_nodes(to_nx(emb.graph), {k + 1: v for k, v in enumerate(emb.preimage)})
                self.assertEqual(set(actual.nodes), set(expected.nodes), (g, t))
                self.assertEqual({frozenset(e) for e in actual.edges}, {frozenset(e) for e in expected.edges}, (g, t))
                self.assertTrue(nx.is_connected(expected))


if __name__ == '__main__':
    unittest.main()
