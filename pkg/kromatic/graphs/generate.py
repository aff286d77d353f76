# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module kromatic.graphs.generate

Isomorphism-free generation of all graphs on n vertices by canonical
augmentation. Every canonical graph on n-1 vertices is extended by a new
vertex with every possible neighbor mask. A child is kept only when the
new vertex is its canonical deletion vertex up to automorphism: among
the vertices with the largest (degree, sorted neighbor degrees) invariant,
the one placed last by the canonical ordering. Each isomorphism class is
then produced from exactly one parent class, and duplicates within one
parent are removed by canonical code.

Levels are computed once per process and kept in memory. The graphs of a
level are emitted in ascending canonical code order.

"""

import multiprocessing

import kromatic
from kromatic.misc import CapacityError, iter_bits, popcount
from kromatic.graphs import Graph
from kromatic.graphs.canonical import _canonical_order, _code_of_order
from kromatic.core import kromaticLogging

_levels = {0: [('', ())]}


class GraphStream(object):
    """ GraphStream(n, entries, position=0)

    Iterator over the canonical graphs on n vertices. The position is the
    index of the next graph; a stream can be resumed by passing a saved
    position or calling seek().

    """

    __slots__ = ['_n', '_entries', '_position']

    def __init__(self, n, entries, position=0):
        self._n = n
        self._entries = entries
        self._position = 0
        self.seek(position)

    @property
    def n(self):
        return self._n

    @property
    def position(self):
        return self._position

    def seek(self, position):
        if not 0 <= position <= len(self._entries):
            raise IndexError('Position %i out of range' % position)
        self._position = position

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return self

    def __next__(self):
        if self._position >= len(self._entries):
            raise StopIteration
        code, rows = self._entries[self._position]
        self._position += 1
        return Graph._from_rows(self._n, rows)

    def codes(self):
        """ codes()
        The canonical codes of all graphs in the stream, in order.
        """
        return [code for code, _ in self._entries]

    def __repr__(self):
        return '<GraphStream n=%i at %i of %i>' % (
            self._n, self._position, len(self._entries))


def _check_bound(n):
    bound = int(kromatic.config.settings.maxGenerateN)
    if not isinstance(n, int) or not 1 <= n <= bound:
        raise CapacityError('Generation supports 1 <= n <= %i, got %r'
                            % (bound, n))


def generate_all(n, workers=None):
    """ generate_all(n, workers=None)
    Get a GraphStream over one canonical representative of every
    isomorphism class of graphs on n vertices.
    """
    _check_bound(n)
    return GraphStream(n, _level(n, workers))


def count_graphs(n, workers=None):
    """ count_graphs(n, workers=None)
    The number of isomorphism classes of graphs on n vertices.
    """
    _check_bound(n)
    return len(_level(n, workers))


def _level(n, workers=None):
    if n in _levels:
        return _levels[n]
    parents = _level(n - 1, workers)
    if workers is None:
        workers = int(kromatic.config.settings.workers)

    with kromaticLogging.LogTimer('Generating graphs on %i vertices' % n) \
            as timer:
        children = []
        if workers > 1 and len(parents) > 64:
            chunksize = max(1, len(parents) // (workers * 8))
            with multiprocessing.Pool(workers) as pool:
                for part in pool.imap(_expand, parents, chunksize):
                    children.extend(part)
        else:
            desc = 'n=%i' % n
            for parent in kromaticLogging.progress(parents, desc):
                children.extend(_expand(parent))
        children.sort()
        timer.summary = '%i graphs' % len(children)

    _levels[n] = children
    return children


def _invariant(rows, degrees, v):
    return degrees[v], sorted(degrees[u] for u in iter_bits(rows[v]))


def _expand(parent):
    """ The accepted children of one canonical parent, as (code, rows)
    with rows in canonical labeling.
    """
    parent_code, parent_rows = parent
    m = len(parent_rows)
    n = m + 1
    newbit = 1 << m
    full = (1 << n) - 1
    parent_degrees = [popcount(row) for row in parent_rows]
    accepted, rejected = set(), set()
    result = []

    for mask in range(1 << m):
        rows = [row | newbit if mask >> i & 1 else row
                for i, row in enumerate(parent_rows)]
        rows.append(mask)
        degrees = [d + (mask >> i & 1) for i, d in enumerate(parent_degrees)]
        degrees.append(popcount(mask))

        # Cheap filter: the new vertex must have the largest invariant
        top = max(degrees)
        if degrees[m] != top:
            continue
        invariants = {v: _invariant(rows, degrees, v)
                      for v in range(n) if degrees[v] == top}
        best = max(invariants.values())
        if invariants[m] != best:
            continue

        order = _canonical_order(n, rows)
        code = _code_of_order(rows, order)
        if code in accepted or code in rejected:
            continue

        candidates = [v for v, inv in invariants.items() if inv == best]
        if len(candidates) > 1:
            position = {v: p for p, v in enumerate(order)}
            chosen = max(candidates, key=position.__getitem__)
            if chosen != m:
                sub = _delete(rows, full & ~(1 << chosen))
                subcode = _code_of_order(sub, _canonical_order(m, sub))
                if subcode != parent_code:
                    rejected.add(code)
                    continue

        accepted.add(code)
        result.append((code, _relabel_rows(rows, order)))

    return result


def _delete(rows, mask):
    verts = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    sub = []
    for v in verts:
        row = 0
        for u in iter_bits(rows[v] & mask):
            row |= 1 << index[u]
        sub.append(row)
    return sub


def _relabel_rows(rows, order):
    perm = [0] * len(order)
    for position, v in enumerate(order):
        perm[v] = position
    result = [0] * len(order)
    for v, row in enumerate(rows):
        newrow = 0
        for u in iter_bits(row):
            newrow |= 1 << perm[u]
        result[perm[v]] = newrow
    return tuple(result)
