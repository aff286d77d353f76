# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Tests for kromatic.ksf.independence.
"""

import itertools
import math
import random
import unittest

import networkx as nx

from kromatic.misc import InputError, CapacityError
from kromatic.graphs import (empty_graph, complete_graph, path_graph,
                             cycle_graph, star_graph, join, disjoint_union,
                             induced_subgraph, relabel)
from kromatic.graphs.generate import generate_all
from kromatic.graphs.canonical import canonical_code
from kromatic.ksf.independence import (Polynomial, Fingerprint,
                                       independence_polynomial,
                                       join_independence_polynomial,
                                       ksf_fingerprint, fingerprint_digest,
                                       fingerprint_diff,
                                       independence_unique_count,
                                       independence_unique_graphs,
                                       find_graphs_with_polynomial,
                                       count_induced_copies, count_claws,
                                       count_from_fingerprint, slot_width)

from kromatic.tests.test_graphs import to_nx, random_graph


def nx_independence_polynomial(G):
    coeffs = [1] + [0] * G.n
    for clique in nx.enumerate_all_cliques(nx.complement(to_nx(G))):
        coeffs[len(clique)] += 1
    return Polynomial(coeffs)


def nx_induced_copies(G, P):
    g, p = to_nx(G), to_nx(P)
    count = 0
    for subset in itertools.combinations(range(G.n), P.n):
        if nx.is_isomorphic(g.subgraph(subset), p):
            count += 1
    return count


class TestPolynomial(unittest.TestCase):

    def test_basics(self):
        p = Polynomial([1, 3, 1, 0])
        self.assertEqual(p.coeffs, (1, 3, 1))
        self.assertEqual(p.degree, 2)
        self.assertEqual(str(p), '1 + 3x + x^2')
        self.assertEqual(p(2), 11)
        self.assertEqual(Polynomial.parse('1,7,15'), Polynomial([1, 7, 15]))
        self.assertRaises(InputError, Polynomial.parse, '1,a')
        self.assertEqual(Polynomial.from_packed(p.packed(4), 4), p)
        self.assertRaises(InputError, p.packed, 1)
        self.assertEqual(slot_width(12), 13)
        self.assertEqual(p + 1, Polynomial([2, 3, 1]))
        self.assertEqual(p - p, Polynomial([]))
        self.assertEqual(str(Polynomial([])), '0')
        self.assertTrue(Polynomial([1, 1]) < Polynomial([1, 0, 1]))


class TestIndependencePolynomial(unittest.TestCase):

    def test_known(self):
        self.assertEqual(independence_polynomial(path_graph(3)).coeffs,
                         (1, 3, 1))
        self.assertEqual(independence_polynomial(cycle_graph(4)).coeffs,
                         (1, 4, 2))
        self.assertEqual(independence_polynomial(empty_graph(3)).coeffs,
                         (1, 3, 3, 1))
        self.assertEqual(independence_polynomial(complete_graph(5)).coeffs,
                         (1, 5))
        self.assertEqual(independence_polynomial(empty_graph(0)).coeffs, (1,))
        # coefficients beyond 16 bits
        self.assertEqual(independence_polynomial(empty_graph(20)).coeffs,
                         tuple(math.comb(20, k) for k in range(21)))

    def test_against_networkx(self):
        rng = random.Random(17)
        for trial in range(40):
            G = random_graph(rng.randint(1, 10), rng.random(), rng)
            self.assertEqual(independence_polynomial(G),
                             nx_independence_polynomial(G))

    def test_join(self):
        G, H = path_graph(3), cycle_graph(4)
        self.assertEqual(independence_polynomial(join(G, H)),
                         join_independence_polynomial(G, H))


class TestFingerprint(unittest.TestCase):

    def test_k2(self):
        F = ksf_fingerprint(complete_graph(2))
        self.assertEqual(F.size, 4)
        self.assertEqual(F.serialize(), '1*1;1,1*2;1,2*1')
        self.assertEqual(F.count([1, 1]), 2)
        self.assertEqual(len(fingerprint_digest(F)), 32)
        int(fingerprint_digest(F), 16)

    def test_matches_induced_subgraphs(self):
        G = random_graph(6, 0.5, random.Random(2))
        expected = {}
        for k in range(G.n + 1):
            for S in itertools.combinations(range(G.n), k):
                p = independence_polynomial(induced_subgraph(G, S))
                expected[p] = expected.get(p, 0) + 1
        self.assertEqual(ksf_fingerprint(G), Fingerprint(expected))
        self.assertEqual(ksf_fingerprint(G).size, 64)

    def test_equality_and_digest(self):
        F1 = ksf_fingerprint(complete_graph(2))
        F2 = ksf_fingerprint(empty_graph(2))
        self.assertNotEqual(F1, F2)
        self.assertNotEqual(F1.digest(), F2.digest())
        self.assertEqual(F1, ksf_fingerprint(complete_graph(2)))
        only1, only2 = fingerprint_diff(F1, F2)
        self.assertEqual(only1, [(Polynomial([1, 2]), 1)])
        self.assertEqual(only2, [(Polynomial([1, 2, 1]), 1)])

    def test_invariant_under_every_relabeling(self):
        rng = random.Random(3)
        for n in range(1, 6):
            for trial in range(3):
                G = random_graph(n, rng.random(), rng)
                F = ksf_fingerprint(G)
                for perm in itertools.permutations(range(n)):
                    self.assertEqual(ksf_fingerprint(relabel(G, perm)), F)

    def test_bound(self):
        self.assertRaises(CapacityError, ksf_fingerprint, empty_graph(13))


class TestCensus(unittest.TestCase):

    def test_unique_counts(self):
        counts = [independence_unique_count(n) for n in range(1, 7)]
        self.assertEqual(counts, [1, 2, 4, 7, 13, 24])

    def test_unique_graphs(self):
        graphs = independence_unique_graphs(4)
        self.assertEqual(len(graphs), 7)
        polys = [independence_polynomial(G) for G in graphs]
        self.assertEqual(len(set(polys)), 7)

    def test_find_graphs_with_polynomial(self):
        # P_3 + K_1 is the only one
        found = find_graphs_with_polynomial(4, [1, 4, 4, 1])
        self.assertEqual(len(found), 1)
        self.assertEqual(found[0].edge_count(), 2)
        found = find_graphs_with_polynomial(3, Polynomial([1, 3, 1]))
        self.assertEqual([canonical_code(g) for g in found], ['011'])


class TestPatternCounts(unittest.TestCase):

    def test_claws(self):
        self.assertEqual(count_claws(star_graph(3)), 1)
        self.assertEqual(count_claws(star_graph(4)), 4)
        self.assertEqual(count_claws(complete_graph(4)), 0)
        rng = random.Random(23)
        claw = star_graph(3)
        for trial in range(10):
            G = random_graph(7, 0.4, rng)
            self.assertEqual(count_claws(G), nx_induced_copies(G, claw))

    def test_induced_copies(self):
        rng = random.Random(29)
        patterns = [path_graph(3), cycle_graph(4), complete_graph(3),
                    disjoint_union(complete_graph(2), empty_graph(1))]
        for trial in range(5):
            G = random_graph(7, 0.5, rng)
            for P in patterns:
                self.assertEqual(count_induced_copies(G, P),
                                 nx_induced_copies(G, P))
        self.assertEqual(count_induced_copies(path_graph(2), path_graph(3)), 0)
        self.assertEqual(count_induced_copies(path_graph(2), empty_graph(0)), 1)

    def test_counts_add_up_to_subsets(self):
        rng = random.Random(37)
        for trial in range(4):
            n = rng.randint(4, 6)
            G = random_graph(n, rng.random(), rng)
            for k in range(1, 5):
                total = sum(count_induced_copies(G, P)
                            for P in generate_all(k))
                self.assertEqual(total, math.comb(n, k))

    def test_count_from_fingerprint(self):
        G = random_graph(7, 0.5, random.Random(31))
        F = ksf_fingerprint(G)
        self.assertEqual(count_from_fingerprint(F, star_graph(3)),
                         count_claws(G))
        self.assertEqual(count_from_fingerprint(F, complete_graph(2)),
                         G.edge_count())
        # C_4 shares its polynomial with the paw
        self.assertRaises(InputError, count_from_fingerprint, F,
                          cycle_graph(4))


if __name__ == '__main__':
    unittest.main()
