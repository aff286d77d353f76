# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Tests for kromatic.graphs.generate, against the networkx graph atlas.
"""

import unittest

import networkx as nx

from kromatic.misc import CapacityError
from kromatic.graphs.canonical import canonical_code
from kromatic.graphs.generate import generate_all, count_graphs

from kromatic.tests.test_graphs import to_nx


class TestGenerate(unittest.TestCase):

    def test_counts(self):
        expected = [1, 2, 4, 11, 34, 156]
        self.assertEqual([count_graphs(n) for n in range(1, 7)], expected)

    def test_small_codes(self):
        self.assertEqual(generate_all(3).codes(), ['000', '001', '011', '111'])
        self.assertEqual(generate_all(2).codes(), ['0', '1'])

    def test_graphs_are_canonical_and_sorted(self):
        stream = generate_all(5)
        codes = stream.codes()
        self.assertEqual(codes, sorted(codes))
        self.assertEqual(len(set(codes)), len(codes))
        for graph, code in zip(stream, codes):
            self.assertEqual(graph.n, 5)
            self.assertEqual(canonical_code(graph), code)

    def test_against_atlas(self):
        atlas = nx.graph_atlas_g()
        for n in range(1, 6):
            theirs = [g for g in atlas if g.number_of_nodes() == n]
            ours = [to_nx(G) for G in generate_all(n)]
            self.assertEqual(len(ours), len(theirs))
            for g in theirs:
                matches = [h for h in ours if nx.is_isomorphic(g, h)]
                self.assertEqual(len(matches), 1)

    def test_stream_position(self):
        stream = generate_all(4)
        first = next(stream)
        next(stream)
        self.assertEqual(stream.position, 2)
        stream.seek(0)
        self.assertEqual(next(stream), first)
        self.assertEqual(len(stream), 11)
        self.assertEqual(len(list(stream)), 10)
        self.assertRaises(IndexError, stream.seek, 12)

    def test_bounds(self):
        self.assertRaises(CapacityError, generate_all, 0)
        self.assertRaises(CapacityError, generate_all, 10)
        self.assertRaises(CapacityError, count_graphs, -1)


if __name__ == '__main__':
    unittest.main()
