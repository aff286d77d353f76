# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Tests for kromatic.ksf.partitions and kromatic.ksf.series.
"""

import random
import unittest
from fractions import Fraction

from kromatic.misc import InputError, TruncationError
from kromatic.ksf.partitions import (Partition, partition_union,
                                     partitions_of, partitions_up_to, ones,
                                     parse_partition)
from kromatic.ksf.series import (SymSeries, MONOMIAL, AUGMENTED, KAUGMENTED,
                                 zero, one, basis_element, odot_product,
                                 ordinary_product, monomial_product,
                                 odot_geometric_inverse_one_plus_m1,
                                 kaugmented_in_monomial, convert)


class TestPartitions(unittest.TestCase):

    def test_partition(self):
        p = Partition([1, 3, 2, 1])
        self.assertEqual(tuple(p), (3, 2, 1, 1))
        self.assertEqual(p.size, 7)
        self.assertEqual(p.length, 4)
        self.assertEqual(p.aut_factor(), 2)
        self.assertEqual(str(p), '[3,2,1,1]')
        self.assertEqual(str(Partition()), '[]')
        self.assertEqual(Partition([2, 2, 2, 1]).aut_factor(), 6)
        self.assertRaises(InputError, Partition, [2, 0])

    def test_union(self):
        u = partition_union(Partition([3, 2, 1, 1]), Partition([4, 2]))
        self.assertEqual(u, Partition([4, 3, 2, 2, 1, 1]))
        self.assertEqual(Partition([1]).union(()), Partition([1]))

    def test_enumeration(self):
        self.assertEqual([len(list(partitions_of(k))) for k in range(8)],
                         [1, 1, 2, 3, 5, 7, 11, 15])
        self.assertEqual(sorted(partitions_of(3)),
                         sorted([Partition([3]), Partition([2, 1]), ones(3)]))
        upto = partitions_up_to(3)
        self.assertEqual(len(upto), 7)
        self.assertEqual(upto[0], Partition())
        self.assertEqual([p.size for p in upto], sorted(p.size for p in upto))

    def test_parse(self):
        self.assertEqual(parse_partition('[4,2,1]'), Partition([4, 2, 1]))
        self.assertEqual(parse_partition('211'), Partition([2, 1, 1]))
        self.assertEqual(parse_partition(' 10,1 '), Partition([10, 1]))
        self.assertEqual(parse_partition('[]'), Partition())
        self.assertRaises(InputError, parse_partition, '2,x')


class TestSymSeries(unittest.TestCase):

    def test_construction(self):
        s = SymSeries(MONOMIAL, 2, {(1,): 2, (2, 1): 5, (1, 1): 0})
        self.assertEqual(len(s), 1)  # [2,1] is above the bound
        self.assertEqual(s.coefficient([1]), Fraction(2))
        self.assertEqual(s.coefficient([2]), 0)
        self.assertRaises(InputError, SymSeries, 'x', 2)
        self.assertRaises(InputError, SymSeries, MONOMIAL, -1)

    def test_arithmetic(self):
        a = basis_element(KAUGMENTED, [1], 3)
        b = basis_element(KAUGMENTED, [2, 1], 3, Fraction(1, 2))
        s = a + b
        self.assertEqual(s - a, b)
        self.assertEqual(2 * b, basis_element(KAUGMENTED, [2, 1], 3))
        self.assertEqual(s - s, 0)
        self.assertTrue((s - s).is_zero())
        self.assertEqual(1 + zero(KAUGMENTED, 3), one(KAUGMENTED, 3))
        self.assertFalse(s.is_integral())
        self.assertRaises(InputError, lambda: a + basis_element(MONOMIAL,
                                                                [1], 3))
        self.assertRaises(InputError, lambda: a + basis_element(KAUGMENTED,
                                                                [1], 4))

    def test_slices_and_truncation(self):
        s = SymSeries(MONOMIAL, 3, {(1,): 1, (1, 1): 2, (2,): 3, (3,): 4})
        self.assertEqual(s.degree_slice(2),
                         SymSeries(MONOMIAL, 3, {(1, 1): 2, (2,): 3}))
        t = s.truncate(1)
        self.assertEqual(t.degree, 1)
        self.assertEqual(t.terms(), [(Partition([1]), 1)])
        self.assertRaises(TruncationError, s.truncate, 4)

    def test_format(self):
        s = SymSeries(KAUGMENTED, 3, {(2, 1): 2, (2,): 1})
        self.assertEqual(s.format(), '1*mbar[2] + 2*mbar[2,1]')
        s = SymSeries(AUGMENTED, 2, {(): Fraction(-1, 3)})
        self.assertEqual(str(s), '-1/3*mtilde[]')
        self.assertEqual(zero(MONOMIAL, 2).format(), '0')


class TestProducts(unittest.TestCase):

    def test_odot(self):
        a = basis_element(AUGMENTED, [2], 5)
        b = basis_element(AUGMENTED, [2, 1], 5, 3)
        self.assertEqual(odot_product(a, b),
                         basis_element(AUGMENTED, [2, 2, 1], 5, 3))
        # truncated away
        c = basis_element(AUGMENTED, [3], 5)
        self.assertTrue(odot_product(c, b).is_zero())
        self.assertRaises(InputError, odot_product,
                          basis_element(MONOMIAL, [1], 3),
                          basis_element(MONOMIAL, [1], 3))
        self.assertRaises(InputError, odot_product, a,
                          basis_element(KAUGMENTED, [1], 5))

    def test_odot_inverse(self):
        for d in range(6):
            one_plus_m1 = one(KAUGMENTED, d) + basis_element(KAUGMENTED,
                                                             [1], d)
            inverse = odot_geometric_inverse_one_plus_m1(d)
            self.assertEqual(odot_product(one_plus_m1, inverse),
                             one(KAUGMENTED, d))

    def test_monomial_products(self):
        self.assertEqual(monomial_product(Partition([1]), Partition([1])),
                         ((Partition([1, 1]), 2), (Partition([2]), 1)))
        self.assertEqual(monomial_product(Partition([1]), Partition([2])),
                         ((Partition([2, 1]), 1), (Partition([3]), 1)))
        self.assertEqual(dict(monomial_product(Partition([1, 1]),
                                               Partition([1]))),
                         {Partition([2, 1]): 1, Partition([1, 1, 1]): 3})
        self.assertEqual(monomial_product(Partition(), Partition([2])),
                         ((Partition([2]), 1),))

    def test_ordinary_product(self):
        m1 = basis_element(MONOMIAL, [1], 2)
        self.assertEqual(ordinary_product(m1, m1),
                         SymSeries(MONOMIAL, 2, {(2,): 1, (1, 1): 2}))
        self.assertRaises(InputError, ordinary_product, m1,
                          basis_element(AUGMENTED, [1], 2))


class TestConvert(unittest.TestCase):

    def test_kaugmented_in_monomial(self):
        self.assertEqual(kaugmented_in_monomial([1], 3),
                         SymSeries(MONOMIAL, 3, {(1,): 1, (1, 1): 1,
                                                 (1, 1, 1): 1}))
        self.assertEqual(kaugmented_in_monomial([1, 1], 3),
                         SymSeries(MONOMIAL, 3, {(1, 1): 2, (1, 1, 1): 6}))
        self.assertEqual(kaugmented_in_monomial([2], 3),
                         basis_element(MONOMIAL, [2], 3))

    def test_monomial_to_kaugmented(self):
        m1 = basis_element(MONOMIAL, [1], 3)
        expected = SymSeries(KAUGMENTED, 3, {(1,): 1,
                                             (1, 1): Fraction(-1, 2),
                                             (1, 1, 1): Fraction(1, 3)})
        self.assertEqual(convert(m1, KAUGMENTED), expected)
        self.assertEqual(convert(expected, MONOMIAL), m1)

    def test_augmented(self):
        s = basis_element(AUGMENTED, [1, 1], 3)
        self.assertEqual(convert(s, MONOMIAL),
                         basis_element(MONOMIAL, [1, 1], 3, 2))
        self.assertEqual(convert(convert(s, KAUGMENTED), AUGMENTED), s)

    def test_degrees(self):
        s = SymSeries(MONOMIAL, 4, {(1,): 1, (2, 2): 1})
        low = convert(s, MONOMIAL, 2)
        self.assertEqual(low.degree, 2)
        self.assertEqual(low, basis_element(MONOMIAL, [1], 2))
        self.assertRaises(TruncationError, convert, s, KAUGMENTED, 5)
        self.assertRaises(InputError, convert, s, 'p')


def random_series(basis, d, rng):
    parts = partitions_up_to(d)
    coeffs = {}
    for _ in range(rng.randint(0, 5)):
        lam = rng.choice(parts)
        coeffs[lam] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return SymSeries(basis, d, coeffs)


class TestOdotLaws(unittest.TestCase):

    def test_laws_on_random_series(self):
        rng = random.Random(17)
        for trial in range(60):
            basis = rng.choice([AUGMENTED, KAUGMENTED])
            d = rng.randint(0, 6)
            a, b, c = [random_series(basis, d, rng) for _ in range(3)]
            self.assertEqual(odot_product(a, b), odot_product(b, a))
            self.assertEqual(odot_product(odot_product(a, b), c),
                             odot_product(a, odot_product(b, c)))
            self.assertEqual(odot_product(a, one(basis, d)), a)
            self.assertTrue(odot_product(a, zero(basis, d)).is_zero())
            self.assertEqual(odot_product(a, b + c),
                             odot_product(a, b) + odot_product(a, c))
            self.assertEqual(odot_product(Fraction(2, 3) * a, b),
                             Fraction(2, 3) * odot_product(a, b))


if __name__ == '__main__':
    unittest.main()
