# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Tests for kromatic.ksf.covers.
"""

import random
import unittest

from kromatic.misc import InputError
from kromatic.graphs import (empty_graph, complete_graph, path_graph,
                             cycle_graph, complete_weighted, disjoint_union,
                             join)
from kromatic.ksf.series import (SymSeries, MONOMIAL, AUGMENTED, KAUGMENTED,
                                 odot_product, ordinary_product, convert)
from kromatic.ksf.covers import (stable_sets, stable_set_covers,
                                 ksf_mbar_truncated, f_series, f_series_all,
                                 f_series_closed_form, ksf_monomial_truncated,
                                 csf_mtilde, clan_expansion, _compositions)

from kromatic.tests.test_graphs import random_graph


class TestCovers(unittest.TestCase):

    def test_stable_sets(self):
        self.assertEqual(stable_sets(path_graph(3)), [1, 2, 4, 5])
        self.assertEqual(stable_sets(complete_graph(3)), [1, 2, 4])
        self.assertEqual(len(stable_sets(empty_graph(4))), 15)

    def test_covers_of_two_points(self):
        E2 = empty_graph(2)
        covers = list(stable_set_covers(E2, 4))
        self.assertEqual(len(covers), 5)
        self.assertEqual(len(set(covers)), 5)
        self.assertEqual(sorted(c.weight for c in covers), [2, 2, 3, 3, 4])
        self.assertEqual(len(list(stable_set_covers(E2, 3))), 4)
        self.assertEqual(list(stable_set_covers(E2, 1)), [])
        expected = SymSeries(KAUGMENTED, 4, {(2,): 1, (1, 1): 1, (2, 1): 2,
                                             (2, 1, 1): 1})
        self.assertEqual(ksf_mbar_truncated(E2, 4), expected)

    def test_weighted(self):
        K = complete_weighted([2, 1])
        self.assertEqual(ksf_mbar_truncated(K, 4),
                         SymSeries(KAUGMENTED, 4, {(2, 1): 1}))
        self.assertEqual(ksf_mbar_truncated(empty_graph(0), 2),
                         SymSeries(KAUGMENTED, 2, {(): 1}))

    def test_f_series(self):
        E2 = empty_graph(2)
        self.assertEqual(f_series(E2, 0, 4),
                         SymSeries(KAUGMENTED, 4, {(2,): 1, (2, 1): 1}))
        self.assertEqual(f_series_closed_form(E2, 0, 4), f_series(E2, 0, 4))
        self.assertRaises(InputError, f_series, E2, 2, 4)

    def test_f_series_identity(self):
        rng = random.Random(41)
        for trial in range(12):
            n = rng.randint(1, 5)
            G = random_graph(n, rng.random(), rng)
            d = n + 2
            ksf, fs = f_series_all(G, d)
            self.assertEqual(ksf, ksf_mbar_truncated(G, d))
            for v in range(n):
                self.assertEqual(fs[v], f_series(G, v, d))
                self.assertEqual(fs[v], f_series_closed_form(G, v, d))


class TestExpansions(unittest.TestCase):

    def test_monomial_matches_covers(self):
        rng = random.Random(43)
        for trial in range(10):
            n = rng.randint(1, 5)
            G = random_graph(n, rng.random(), rng)
            d = n + 1
            self.assertEqual(convert(ksf_mbar_truncated(G, d), MONOMIAL),
                             ksf_monomial_truncated(G, d))

    def test_csf(self):
        P3 = path_graph(3)
        self.assertEqual(csf_mtilde(P3),
                         SymSeries(AUGMENTED, 3, {(1, 1, 1): 1, (2, 1): 1}))
        self.assertEqual(convert(csf_mtilde(P3), MONOMIAL),
                         SymSeries(MONOMIAL, 3, {(2, 1): 1, (1, 1, 1): 6}))
        self.assertEqual(csf_mtilde(P3, degree=5).degree, 5)
        self.assertRaises(InputError, csf_mtilde, P3, 2)
        # the lowest degree of the KSF is the CSF
        C = cycle_graph(5)
        low = convert(ksf_mbar_truncated(C, 5), AUGMENTED).degree_slice(5)
        self.assertEqual(low, csf_mtilde(C))

    def test_clan_expansion(self):
        self.assertEqual(sorted(_compositions((1, 1), 3)),
                         [(1, 1), (1, 2), (2, 1)])
        self.assertEqual(list(_compositions((2, 2), 3)), [])
        rng = random.Random(47)
        for trial in range(6):
            n = rng.randint(1, 4)
            G = random_graph(n, rng.random(), rng)
            self.assertEqual(clan_expansion(G, n + 1),
                             ksf_monomial_truncated(G, n + 1))

    def test_products(self):
        G, H = path_graph(3), complete_graph(2)
        d = 6
        self.assertEqual(ksf_mbar_truncated(join(G, H), d),
                         odot_product(ksf_mbar_truncated(G, d),
                                      ksf_mbar_truncated(H, d)))
        self.assertEqual(ksf_monomial_truncated(disjoint_union(G, H), d),
                         ordinary_product(ksf_monomial_truncated(G, d),
                                          ksf_monomial_truncated(H, d)))


if __name__ == '__main__':
    unittest.main()
