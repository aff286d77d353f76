# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module kromatic.ksf.partitions

Integer partitions, the index set of all three symmetric function bases.

"""

import math
from collections import Counter

from sympy.utilities.iterables import partitions as _sympy_partitions

from kromatic.misc import InputError


class Partition(tuple):
    """ Partition(parts=())

    An integer partition: a weakly decreasing tuple of positive ints. The
    parts may be given in any order. The empty partition has size 0.

    """

    __slots__ = []

    def __new__(cls, parts=()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] < 1:
            raise InputError('Partition parts must be positive, got %r'
                             % (parts,))
        return tuple.__new__(cls, parts)

    @property
    def size(self):
        """ The sum of the parts.
        """
        return sum(self)

    @property
    def length(self):
        return len(self)

    def multiplicities(self):
        """ multiplicities()
        Dict mapping each part to the number of times it occurs.
        """
        return dict(Counter(self))

    def aut_factor(self):
        """ aut_factor()
        The product of r_i! over the multiplicities r_i, the factor that
        relates the augmented and the ordinary monomial basis.
        """
        result = 1
        for r in Counter(self).values():
            result *= math.factorial(r)
        return result

    def union(self, other):
        return partition_union(self, other)

    def sort_key(self):
        """ Report order: by size, then by the parts.
        """
        return (self.size, tuple(self))

    def __repr__(self):
        return 'Partition(%s)' % list(self)

    def __str__(self):
        return '[%s]' % ','.join(str(p) for p in self)


def partition_union(a, b):
    """ partition_union(a, b)
    The partition whose parts are those of a together with those of b.
    """
    return Partition(tuple(a) + tuple(b))


def partitions_of(size):
    """ partitions_of(size)
    Generate the partitions of the given size, in decreasing order.
    """
    if size == 0:
        yield Partition()
        return
    for counts in _sympy_partitions(size):
        parts = []
        for part, mult in counts.items():
            parts.extend([part] * mult)
        yield Partition(parts)


def partitions_up_to(d):
    """ partitions_up_to(d)
    List all partitions of size at most d, in report order.
    """
    result = []
    for size in range(d + 1):
        result.extend(partitions_of(size))
    result.sort(key=Partition.sort_key)
    return result


def ones(k):
    """ ones(k)
    The partition 1^k with k parts equal to one.
    """
    return Partition((1,) * k)


def parse_partition(text):
    """ parse_partition(text)
    Read a partition written as "4,2,1", "[4,2,1]" or "421" (single digit
    parts only in the last form).
    """
    text = text.strip().strip('[]').strip()
    if not text:
        return Partition()
    try:
        if ',' in text:
            return Partition(int(p) for p in text.split(','))
        return Partition(int(c) for c in text)
    except ValueError:
        raise InputError('Cannot parse partition %r' % text)
