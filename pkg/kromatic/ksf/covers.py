# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module kromatic.ksf.covers

Stable set covers and the expansions of the Kromatic and chromatic
symmetric functions built on them.

A stable set cover (SSC) of a weighted graph is a set of distinct
nonempty stable sets whose union is the vertex set. Its partition
lambda(C) collects the weights of its members. The Kromatic symmetric
function is the sum of m-_lambda(C) over all covers, so truncating at
degree d only needs the covers of total weight at most d. Covers are
enumerated by a depth-first search over the stable sets in (size, mask)
order, each member chosen after the previous one, pruned on the weight
budget: the still uncovered vertices cost at least their own weight.

"""

import math
from collections import Counter, defaultdict
from fractions import Fraction

from kromatic.misc import InputError, iter_bits, popcount
from kromatic.graphs import clan_graph, delete_vertex
from kromatic.ksf.partitions import Partition, ones
from kromatic.ksf.series import (SymSeries, MONOMIAL, AUGMENTED, KAUGMENTED,
                                 odot_product, odot_geometric_inverse_one_plus_m1,
                                 convert)


def stable_sets(G):
    """ stable_sets(G)
    All nonempty stable (independent) vertex sets of G as masks, sorted by
    (size, mask).
    """
    adj = G.graph.adj
    full = (1 << G.n) - 1
    result = []
    stack = [(0, full)]
    while stack:
        current, candidates = stack.pop()
        for v in iter_bits(candidates):
            new = current | (1 << v)
            result.append(new)
            higher = candidates & ~((2 << v) - 1) & ~adj[v]
            if higher:
                stack.append((new, higher))
    result.sort(key=lambda mask: (popcount(mask), mask))
    return result


def _mask_weight(weights, mask):
    return sum(weights[v] for v in iter_bits(mask))


class StableSetCover(object):
    """ StableSetCover(host, masks)

    A stable set cover of the weighted graph host, given by the bit masks
    of its members.

    """

    __slots__ = ['_host', '_masks']

    def __init__(self, host, masks):
        self._host = host
        self._masks = tuple(masks)

    @property
    def host(self):
        return self._host

    @property
    def masks(self):
        return self._masks

    @property
    def sets(self):
        """ The members as ascending vertex tuples.
        """
        return [tuple(iter_bits(mask)) for mask in self._masks]

    @property
    def partition(self):
        """ lambda(C): the partition of member weights.
        """
        weights = self._host.weights
        return Partition(_mask_weight(weights, m) for m in self._masks)

    @property
    def weight(self):
        return self.partition.size

    def __eq__(self, other):
        if not isinstance(other, StableSetCover):
            return NotImplemented
        return set(self._masks) == set(other._masks) and \
            self._host == other._host

    def __hash__(self):
        return hash(frozenset(self._masks))

    def __repr__(self):
        sets = ' '.join('{%s}' % ','.join(str(v) for v in s)
                        for s in self.sets)
        return '<StableSetCover %s>' % sets


def _iter_covers(G, d, exclude=()):
    """ Generate the covers of total weight <= d as (masks, weights)
    lists; stable sets in exclude are not used.
    """
    n = G.n
    full = (1 << n) - 1
    weights = G.weights
    sets = [s for s in stable_sets(G) if s not in exclude]
    setweights = [_mask_weight(weights, s) for s in sets]
    suffix = [0] * (len(sets) + 1)
    for i in range(len(sets) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | sets[i]
    chosen, chosen_weights = [], []

    def dfs(start, covered, budget):
        uncovered = full & ~covered
        if not uncovered:
            yield chosen, chosen_weights
        elif uncovered & ~suffix[start]:
            return
        elif _mask_weight(weights, uncovered) > budget:
            return
        for j in range(start, len(sets)):
            w = setweights[j]
            if w > budget:
                continue
            if uncovered & ~suffix[j]:
                break  # some uncovered vertex occurs only in sets before j
            chosen.append(sets[j])
            chosen_weights.append(w)
            yield from dfs(j + 1, covered | sets[j], budget - w)
            chosen.pop()
            chosen_weights.pop()

    if n == 0:
        yield [], []
        return
    yield from dfs(0, 0, d)


def stable_set_covers(G, d):
    """ stable_set_covers(G, d)
    Generate every StableSetCover of G with total weight at most d, each
    exactly once. Empty if d is below the total weight of G.
    """
    for masks, _ in _iter_covers(G, d):
        yield StableSetCover(G, list(masks))


def ksf_mbar_truncated(G, d):
    """ ksf_mbar_truncated(G, d)
    The Kromatic symmetric function of G in the K-augmented basis,
    truncated at degree d: the coefficient of m-_lambda is the number of
    stable set covers with partition lambda.
    """
    counts = Counter()
    for _, weights in _iter_covers(G, d):
        counts[Partition(weights)] += 1
    return SymSeries(KAUGMENTED, d, counts)


def f_series(G, v, d):
    """ f_series(G, v, d)
    The sum of m-_lambda(C) over the covers C of G that do not contain the
    singleton {v}, truncated at d.
    """
    G.graph._check_vertex(v)
    counts = Counter()
    for _, weights in _iter_covers(G, d, exclude=(1 << v,)):
        counts[Partition(weights)] += 1
    return SymSeries(KAUGMENTED, d, counts)


def f_series_all(G, d):
    """ f_series_all(G, d)
    The KSF of G and f_series(G, v, d) for every vertex v, from a single
    cover enumeration. Returns (ksf, [f_0, f_1, ...]).
    """
    n = G.n
    total = Counter()
    per_vertex = [Counter() for _ in range(n)]
    singletons = {1 << v: v for v in range(n)}
    for masks, weights in _iter_covers(G, d):
        key = Partition(weights)
        total[key] += 1
        present = 0
        for m in masks:
            if m in singletons:
                present |= m
        for v in range(n):
            if not present >> v & 1:
                per_vertex[v][key] += 1
    return (SymSeries(KAUGMENTED, d, total),
            [SymSeries(KAUGMENTED, d, c) for c in per_vertex])


def f_series_closed_form(G, v, d):
    """ f_series_closed_form(G, v, d)
    f(v, G) recomputed from the KSFs of G and G - v:
    (X_G - X_(G-v) . m-_1) . sum_k (-1)^k m-_(1^k), with . the odot product.
    """
    G.graph._check_vertex(v)
    m1 = SymSeries(KAUGMENTED, d, {ones(1): 1})
    base = ksf_mbar_truncated(G, d) - odot_product(
        ksf_mbar_truncated(delete_vertex(G, v), d), m1)
    return odot_product(base, odot_geometric_inverse_one_plus_m1(d))


def ksf_monomial_truncated(G, d):
    """ ksf_monomial_truncated(G, d)

    The Kromatic symmetric function of G in the monomial basis, truncated
    at d. The coefficient of m_alpha counts the proper set colorings with
    colors 1..l whose color classes S_i have weight alpha_i: ordered
    tuples of stable sets of the right weights whose union is V. The count
    is a dynamic program over covered vertex masks, shared between
    partitions with a common prefix of parts.

    """
    n = G.n
    full = (1 << n) - 1
    weights = G.weights
    by_weight = defaultdict(list)
    for s in stable_sets(G):
        by_weight[_mask_weight(weights, s)].append(s)
    coeffs = {Partition(): 1 if n == 0 else 0}

    def extend(dp, parts, budget, maxpart):
        for part in range(min(budget, maxpart), 0, -1):
            sets = by_weight.get(part)
            if not sets:
                continue
            new = defaultdict(int)
            for covered, count in dp.items():
                for s in sets:
                    new[covered | s] += count
            key = parts + (part,)
            if new.get(full):
                coeffs[Partition(key)] = new[full]
            extend(new, key, budget - part, part)

    extend({0: 1}, (), d, d)
    return SymSeries(MONOMIAL, d, coeffs)


def csf_mtilde(G, degree=None):
    """ csf_mtilde(G, degree=None)

    The chromatic symmetric function of G in the augmented basis: the
    coefficient of m~_lambda is the number of partitions of V into stable
    sets whose weights form lambda. The series is homogeneous, so it is
    exact at any degree bound at least the total weight (the default).

    """
    n = G.n
    adj = G.graph.adj
    weights = G.weights
    total = sum(weights)
    if degree is None:
        degree = total
    elif degree < total:
        raise InputError('Degree bound %i is below the total weight %i'
                         % (degree, total))
    memo = {0: Counter({(): 1})}

    def blocks(v, avail):
        # Stable sets containing v inside avail
        stack = [(1 << v, avail & ~adj[v] & ~(1 << v))]
        while stack:
            block, cands = stack.pop()
            yield block
            for u in iter_bits(cands):
                higher = cands & ~((2 << u) - 1) & ~adj[u]
                stack.append((block | (1 << u), higher))

    def rec(uncovered):
        if uncovered in memo:
            return memo[uncovered]
        low = uncovered & -uncovered
        v = low.bit_length() - 1
        result = Counter()
        for block in blocks(v, uncovered):
            w = _mask_weight(weights, block)
            for parts, count in rec(uncovered & ~block).items():
                result[tuple(sorted(parts + (w,), reverse=True))] += count
        memo[uncovered] = result
        return result

    coeffs = {Partition(parts): c for parts, c in rec((1 << n) - 1).items()}
    return SymSeries(AUGMENTED, degree, coeffs)


def _compositions(weights, d):
    """ Generate the tuples alpha with alpha_i >= 1 and
    sum(alpha_i * w_i) <= d.
    """
    n = len(weights)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[i]
    alpha = []

    def rec(i, budget):
        if i == n:
            yield tuple(alpha)
            return
        w = weights[i]
        k = 1
        while k * w + suffix[i + 1] <= budget:
            alpha.append(k)
            yield from rec(i + 1, budget - k * w)
            alpha.pop()
            k += 1

    if suffix[0] <= d:
        yield from rec(0, d)


def clan_expansion(G, d):
    """ clan_expansion(G, d)
    The Kromatic symmetric function of G in the monomial basis, truncated
    at d, as the sum over compositions alpha of 1/alpha! times the
    chromatic symmetric function of the alpha-clan graph.
    """
    result = SymSeries(MONOMIAL, d)
    for alpha in _compositions(G.weights, d):
        factor = 1
        for a in alpha:
            factor *= math.factorial(a)
        clan = clan_graph(G, alpha)
        csf = convert(csf_mtilde(clan, degree=d), MONOMIAL)
        result = result + csf * Fraction(1, factor)
    return result
