# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module kromatic.ksf.series

Truncated symmetric series. A SymSeries is a finite combination of basis
elements indexed by partitions, in one of three bases:

* MONOMIAL ('m'): the monomial symmetric functions m_lambda.
* AUGMENTED ('mtilde'): m~_lambda = m_lambda times the product of r_i!,
  with r_i the part multiplicities of lambda.
* KAUGMENTED ('mbar'): m-_lambda, the Kromatic symmetric function of the
  weighted complete graph K_lambda.

Each series carries a degree bound d: only partitions of size at most d
are kept, and all arithmetic truncates at d. Coefficients are exact
Fractions. Series with different bounds or bases never mix silently;
that raises InputError.

"""

import functools
from fractions import Fraction
from numbers import Rational

from sympy.utilities.iterables import multiset_permutations

from kromatic.misc import InputError, TruncationError
from kromatic.ksf.partitions import Partition, partition_union, ones

MONOMIAL = 'm'
AUGMENTED = 'mtilde'
KAUGMENTED = 'mbar'

BASES = (MONOMIAL, AUGMENTED, KAUGMENTED)


class SymSeries(object):
    """ SymSeries(basis, degree, coeffs=None)

    A truncated symmetric series. coeffs maps partitions (or anything
    Partition accepts) to rationals; zero coefficients and partitions of
    size above the degree bound are dropped.

    """

    __slots__ = ['_basis', '_degree', '_coeffs']

    def __init__(self, basis, degree, coeffs=None):
        if basis not in BASES:
            raise InputError('Unknown basis %r, use one of %r' % (basis, BASES))
        if not isinstance(degree, int) or degree < 0:
            raise InputError('Degree bound must be a nonnegative int, got %r'
                             % (degree,))
        self._basis = basis
        self._degree = degree
        self._coeffs = {}
        for key, value in (coeffs or {}).items():
            key = key if isinstance(key, Partition) else Partition(key)
            if key.size > degree:
                continue
            value = Fraction(value)
            if value:
                self._coeffs[key] = value

    @property
    def basis(self):
        return self._basis

    @property
    def degree(self):
        """ The degree bound.
        """
        return self._degree

    def coefficient(self, partition):
        """ coefficient(partition)
        The coefficient of the given basis element (0 if absent).
        """
        if not isinstance(partition, Partition):
            partition = Partition(partition)
        return self._coeffs.get(partition, Fraction(0))

    def terms(self):
        """ terms()
        List of (Partition, Fraction), by size and then by parts.
        """
        return sorted(self._coeffs.items(), key=lambda t: t[0].sort_key())

    def items(self):
        return self._coeffs.items()

    def __len__(self):
        return len(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def is_integral(self):
        return all(c.denominator == 1 for c in self._coeffs.values())

    def degree_slice(self, k):
        """ degree_slice(k)
        The part of the series made of partitions of size k.
        """
        return SymSeries(self._basis, self._degree,
                         {p: c for p, c in self._coeffs.items()
                          if p.size == k})

    def truncate(self, degree):
        """ truncate(degree)
        The same series with a lower (or equal) degree bound.
        """
        if degree > self._degree:
            raise TruncationError('Cannot raise the degree bound from %i to '
                                  '%i' % (self._degree, degree))
        return SymSeries(self._basis, degree, self._coeffs)

    ## Arithmetic

    def _check_compatible(self, other):
        if other._basis != self._basis:
            raise InputError('Basis mismatch: %s and %s'
                             % (self._basis, other._basis))
        if other._degree != self._degree:
            raise InputError('Degree bound mismatch: %i and %i'
                             % (self._degree, other._degree))

    def _coerce(self, other):
        if isinstance(other, SymSeries):
            self._check_compatible(other)
            return other
        if isinstance(other, Rational):
            return SymSeries(self._basis, self._degree, {(): other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        coeffs = dict(self._coeffs)
        for key, value in other._coeffs.items():
            coeffs[key] = coeffs.get(key, 0) + value
        return SymSeries(self._basis, self._degree, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return SymSeries(self._basis, self._degree,
                         {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, scalar):
        if not isinstance(scalar, Rational):
            return NotImplemented
        return SymSeries(self._basis, self._degree,
                         {k: v * scalar for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash((self._basis, self._degree,
                     frozenset(self._coeffs.items())))

    ## Text

    def format(self):
        """ format()
        The report form, such as "1*mbar[2] + 2*mbar[2,1]".
        """
        if not self._coeffs:
            return '0'
        return ' + '.join('%s*%s%s' % (_format_coefficient(c), self._basis, p)
                          for p, c in self.terms())

    def __str__(self):
        return self.format()

    def __repr__(self):
        return '<SymSeries %s d=%i: %s>' % (self._basis, self._degree,
                                            self.format())


def _format_coefficient(c):
    if c.denominator == 1:
        return '%i' % c.numerator
    return '%i/%i' % (c.numerator, c.denominator)


## Constructors

def zero(basis, degree):
    return SymSeries(basis, degree)


def one(basis, degree):
    """ one(basis, degree)
    The constant series 1.
    """
    return SymSeries(basis, degree, {(): 1})


def basis_element(basis, partition, degree, coeff=1):
    """ basis_element(basis, partition, degree, coeff=1)
    coeff times a single basis element.
    """
    return SymSeries(basis, degree, {Partition(partition): coeff})


## Products

def odot_product(a, b):
    """ odot_product(a, b)

    The product defined on the augmented bases by
    m~_lambda . m~_mu = m~_(lambda u mu), and the same rule for the
    K-augmented basis, truncated at the shared degree bound. Kromatic
    symmetric functions multiply under this product over graph joins.

    """
    if a.basis not in (AUGMENTED, KAUGMENTED) or a.basis != b.basis:
        raise InputError('odot_product needs two series in the same '
                         'augmented basis, got %s and %s' % (a.basis, b.basis))
    if a.degree != b.degree:
        raise InputError('Degree bound mismatch: %i and %i'
                         % (a.degree, b.degree))
    d = a.degree
    coeffs = {}
    for lam, c in a.items():
        for mu, e in b.items():
            if lam.size + mu.size > d:
                continue
            key = partition_union(lam, mu)
            coeffs[key] = coeffs.get(key, 0) + c * e
    return SymSeries(a.basis, d, coeffs)


def ordinary_product(a, b):
    """ ordinary_product(a, b)
    The usual product of symmetric functions, on two series in the
    monomial basis, truncated at the shared degree bound.
    """
    if a.basis != MONOMIAL or b.basis != MONOMIAL:
        raise InputError('ordinary_product needs two series in the monomial '
                         'basis, got %s and %s' % (a.basis, b.basis))
    if a.degree != b.degree:
        raise InputError('Degree bound mismatch: %i and %i'
                         % (a.degree, b.degree))
    d = a.degree
    coeffs = {}
    for lam, c in a.items():
        for mu, e in b.items():
            if lam.size + mu.size > d:
                continue
            for nu, k in monomial_product(lam, mu):
                coeffs[nu] = coeffs.get(nu, 0) + c * e * k
    return SymSeries(MONOMIAL, d, coeffs)


@functools.lru_cache(maxsize=None)
def monomial_product(lam, mu):
    """ monomial_product(lam, mu)

    The expansion of m_lam * m_mu, as a tuple of (Partition, int). The
    coefficient of m_nu counts the pairs of exponent vectors, one a
    rearrangement of lam and one of mu, that add up to nu.

    """
    lam, mu = Partition(lam), Partition(mu)
    if not lam:
        return ((mu, 1),)
    if not mu:
        return ((lam, 1),)

    # Every nu comes from some alignment of the parts of mu against lam
    alpha = tuple(lam) + (0,) * len(mu)
    candidates = set()
    for beta in multiset_permutations(list(mu) + [0] * len(lam)):
        candidates.add(Partition(x + y for x, y in zip(alpha, beta) if x + y))

    result = []
    for nu in sorted(candidates, key=Partition.sort_key):
        count = 0
        padded = list(lam) + [0] * (len(nu) - len(lam))
        for arrangement in multiset_permutations(padded):
            rest = [x - y for x, y in zip(nu, arrangement)]
            if min(rest) < 0:
                continue
            if Partition(r for r in rest if r) == mu:
                count += 1
        if count:
            result.append((nu, count))
    return tuple(result)


def odot_geometric_inverse_one_plus_m1(d):
    """ odot_geometric_inverse_one_plus_m1(d)
    The inverse of 1 + m-_1 under the odot product:
    the sum of (-1)^k m-_(1^k) for k = 0..d.
    """
    return SymSeries(KAUGMENTED, d, {ones(k): (-1) ** k for k in range(d + 1)})


## Change of basis

@functools.lru_cache(maxsize=None)
def _kaugmented_in_monomial(lam, d):
    from kromatic.graphs import complete_weighted
    from kromatic.ksf.covers import ksf_monomial_truncated
    series = ksf_monomial_truncated(complete_weighted(lam), d)
    return tuple(series.items())


def kaugmented_in_monomial(lam, d):
    """ kaugmented_in_monomial(lam, d)
    m-_lam in the monomial basis, truncated at d: the monomial expansion
    of the Kromatic symmetric function of K_lam.
    """
    return SymSeries(MONOMIAL, d, dict(_kaugmented_in_monomial(Partition(lam),
                                                              d)))


def convert(series, target, degree=None):
    """ convert(series, target, degree=None)

    Express a series in another basis, at the same degree bound or at a
    lower one. Going from m to m- works by ascending size: the leading
    term of m-_lam is prod(r_i!) m_lam and all its other terms are
    larger.

    """
    if target not in BASES:
        raise InputError('Unknown basis %r, use one of %r' % (target, BASES))
    d = series.degree if degree is None else degree
    if d > series.degree:
        raise TruncationError('Target degree %i exceeds the available bound '
                              '%i' % (d, series.degree))
    series = series.truncate(d)

    # To the monomial basis
    if series.basis == MONOMIAL:
        mono = series
    elif series.basis == AUGMENTED:
        mono = SymSeries(MONOMIAL, d, {lam: c * lam.aut_factor()
                                       for lam, c in series.items()})
    else:
        coeffs = {}
        for lam, c in series.items():
            for nu, e in _kaugmented_in_monomial(lam, d):
                coeffs[nu] = coeffs.get(nu, 0) + c * e
        mono = SymSeries(MONOMIAL, d, coeffs)

    # From the monomial basis
    if target == MONOMIAL:
        return mono
    elif target == AUGMENTED:
        return SymSeries(AUGMENTED, d, {lam: c / lam.aut_factor()
                                        for lam, c in mono.items()})
    remaining = dict(mono.items())
    result = {}
    while remaining:
        lam = min(remaining, key=Partition.sort_key)
        if lam.size > d:
            raise TruncationError('Partition %s is above the degree bound %i'
                                  % (lam, d))
        coef = remaining[lam] / lam.aut_factor()
        result[lam] = coef
        for nu, e in _kaugmented_in_monomial(lam, d):
            value = remaining.get(nu, 0) - coef * e
            if value:
                remaining[nu] = value
            else:
                remaining.pop(nu, None)
    return SymSeries(KAUGMENTED, d, result)
