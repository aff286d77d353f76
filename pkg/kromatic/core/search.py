# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module search

The search for nonisomorphic graphs with equal Kromatic symmetric
function, the verification record of a single pair, and the fingerprint
cache.

The search fingerprints every canonical graph on n vertices, buckets the
graphs by fingerprint digest and confirms every candidate pair by full
fingerprint comparison. A digest alone never admits a pair. Reports are
sorted, so the output does not depend on the number of workers.

"""

import collections
import json
import os
import re

import kromatic
from kromatic.misc import InputError, CacheError
from kromatic.graphs.canonical import (canonical_graph, is_isomorphic,
                                       min_edge_deletions_to_isomorphic)
from kromatic.graphs.generate import generate_all
from kromatic.graphs.graph6 import to_graph6, from_graph6
from kromatic.ksf.independence import ksf_fingerprint, count_induced_copies
from kromatic.ksf.covers import ksf_mbar_truncated, csf_mtilde
from kromatic.ksf.constructions import find_ksf_equal_vertex_pairs
from kromatic.core import kromaticLogging
from kromatic.core.tasks import parallel_map


class PairReport(object):
    """ PairReport(g1, g2, n, fingerprint_digest, nonisomorphic,
    min_edge_deletions, vertex_pair_count)

    A pair of nonisomorphic graphs with equal KSF, as canonical graph6
    strings with g1 < g2.

    """

    __slots__ = ['g1', 'g2', 'n', 'fingerprint_digest', 'nonisomorphic',
                 'min_edge_deletions', 'vertex_pair_count']

    def __init__(self, g1, g2, n, fingerprint_digest, nonisomorphic,
                 min_edge_deletions, vertex_pair_count):
        if g2 < g1:
            g1, g2 = g2, g1
        self.g1 = g1
        self.g2 = g2
        self.n = n
        self.fingerprint_digest = fingerprint_digest
        self.nonisomorphic = nonisomorphic
        self.min_edge_deletions = min_edge_deletions
        self.vertex_pair_count = vertex_pair_count

    def graphs(self):
        return from_graph6(self.g1), from_graph6(self.g2)

    def to_record(self):
        return {key: getattr(self, key) for key in self.__slots__}

    def to_json(self):
        return json.dumps(self.to_record(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        record = json.loads(text)
        return cls(**{key: record[key] for key in cls.__slots__})

    def __eq__(self, other):
        if not isinstance(other, PairReport):
            return NotImplemented
        return self.to_record() == other.to_record()

    def __hash__(self):
        return hash((self.g1, self.g2))

    def __repr__(self):
        return '<PairReport %s %s n=%i deletions=%s pairs=%i>' % (
            self.g1, self.g2, self.n, self.min_edge_deletions,
            self.vertex_pair_count)


def _fingerprint_of_graph6(g6):
    # Module level, so that worker processes can run it
    return ksf_fingerprint(from_graph6(g6))


def search_equal_ksf(n, workers=None):
    """ search_equal_ksf(n, workers=None)
    All unordered pairs of nonisomorphic graphs on n vertices with equal
    Fingerprint, as PairReports sorted by (g1, g2).
    """
    k_max = int(kromatic.config.search.maxEdgeDeletions)
    codes = [to_graph6(graph) for graph in generate_all(n, workers)]

    with kromaticLogging.LogTimer('Searching equal KSF pairs on %i vertices'
                                  % n) as timer:
        prints = parallel_map(_fingerprint_of_graph6, codes, workers)

        buckets = collections.defaultdict(list)
        for g6, fp in zip(codes, prints):
            buckets[fp.digest()].append((g6, fp))

        reports = []
        for digest, members in buckets.items():
            if len(members) < 2:
                continue
            # Confirm on the full multiset, never on the digest
            classes = collections.defaultdict(list)
            for g6, fp in members:
                classes[fp].append(g6)
            for fp, group in classes.items():
                for i in range(len(group)):
                    for j in range(i + 1, len(group)):
                        reports.append(_make_report(group[i], group[j], n,
                                                    fp.digest(), k_max))
        reports.sort(key=lambda r: (r.g1, r.g2))
        timer.summary = '%i graphs, %i pairs' % (len(codes), len(reports))
    return reports


def _make_report(g6a, g6b, n, digest, k_max):
    G1, G2 = from_graph6(g6a), from_graph6(g6b)
    return PairReport(g6a, g6b, n, digest,
                      not is_isomorphic(G1, G2),
                      min_edge_deletions_to_isomorphic(G1, G2, k_max),
                      len(find_ksf_equal_vertex_pairs(G1, G2)))


def save_reports(filename, reports):
    """ save_reports(filename, reports)
    Write reports as JSON lines. Returns the number written.
    """
    count = 0
    with open(filename, 'w', encoding='utf-8') as f:
        for report in reports:
            f.write(report.to_json() + '\n')
            count += 1
    return count


def load_reports(filename):
    """ load_reports(filename)
    Read the PairReports of a JSON lines file.
    """
    reports = []
    with open(filename, 'rb') as f:
        for i, line in enumerate(f):
            if not line.strip():
                continue
            try:
                reports.append(PairReport.from_json(line.decode('utf-8')))
            except (ValueError, KeyError, TypeError) as err:
                raise CacheError(filename, i + 1, str(err))
    return reports


## Pair verification

class PairVerification(object):
    """ PairVerification(...)

    The checks on one pair of graphs: equal fingerprints, nonisomorphic,
    equal truncated K-augmented series and equal chromatic symmetric
    functions. A pair is certified when all four hold.

    """

    __slots__ = ['fingerprints_equal', 'nonisomorphic',
                 'truncated_series_equal', 'csf_equal', 'degree',
                 'digest1', 'digest2']

    def __init__(self, fingerprints_equal, nonisomorphic,
                 truncated_series_equal, csf_equal, degree, digest1, digest2):
        self.fingerprints_equal = fingerprints_equal
        self.nonisomorphic = nonisomorphic
        self.truncated_series_equal = truncated_series_equal
        self.csf_equal = csf_equal
        self.degree = degree
        self.digest1 = digest1
        self.digest2 = digest2

    @property
    def certified(self):
        return (self.fingerprints_equal and self.nonisomorphic and
                self.truncated_series_equal and self.csf_equal)

    def to_record(self):
        record = {key: getattr(self, key) for key in self.__slots__}
        record['certified'] = self.certified
        return record

    def to_json(self):
        return json.dumps(self.to_record(), sort_keys=True)

    def __repr__(self):
        return '<PairVerification certified=%s>' % self.certified


def verify_pair(G1, G2, d=None):
    """ verify_pair(G1, G2, d=None)
    Check a pair of graphs on the same number of vertices. The series are
    compared at degree bound d (default n + degreeOffset).
    """
    if G1.n != G2.n:
        raise InputError('Graphs have %i and %i vertices' % (G1.n, G2.n))
    if d is None:
        d = kromatic.defaultDegree(G1.n)
    f1, f2 = ksf_fingerprint(G1), ksf_fingerprint(G2)
    series_equal = ksf_mbar_truncated(G1, d) == ksf_mbar_truncated(G2, d)
    return PairVerification(f1 == f2, not is_isomorphic(G1, G2),
                            series_equal, csf_mtilde(G1) == csf_mtilde(G2),
                            d, f1.digest(), f2.digest())


## Census

def census(pattern, graphs):
    """ census(pattern, graphs)
    Generate (graph6, count) with the number of induced copies of pattern
    in each graph.
    """
    for graph in graphs:
        yield to_graph6(graph), count_induced_copies(graph, pattern)


## Fingerprint cache

_DIGEST_RE = re.compile(r'^[0-9a-f]{32}$')


def default_cache_file(n):
    """ default_cache_file(n)
    The fingerprint cache file for graphs on n vertices.
    """
    return os.path.join(kromatic.cacheDir, 'fingerprints-%i.tsv' % n)


def read_fingerprint_cache(filename):
    """ read_fingerprint_cache(filename)
    Dict mapping canonical graph6 to digest. A missing file is an empty
    cache; a malformed line raises CacheError.
    """
    entries = {}
    if not os.path.isfile(filename):
        return entries
    try:
        f = open(filename, 'rb')
    except OSError as err:
        raise CacheError(filename, 0, str(err))
    with f:
        for i, raw in enumerate(f):
            try:
                line = raw.decode('ascii').rstrip('\r\n')
            except UnicodeDecodeError:
                raise CacheError(filename, i + 1, 'line is not ASCII')
            if not line:
                continue
            parts = line.split('\t')
            if len(parts) != 2:
                raise CacheError(filename, i + 1, 'expected "g6<TAB>digest"')
            g6, digest = parts
            if not _DIGEST_RE.match(digest):
                raise CacheError(filename, i + 1, 'invalid digest %r' % digest)
            try:
                from_graph6(g6)
            except InputError as err:
                raise CacheError(filename, i + 1, str(err))
            entries[g6] = digest
    return entries


def cache_fingerprints(graphs, filename):
    """ cache_fingerprints(graphs, filename)
    Append the digests of the graphs missing from the cache file, keyed by
    canonical graph6. Returns the number of entries written; running it
    again on the same graphs writes none.
    """
    existing = read_fingerprint_cache(filename)
    dirname = os.path.dirname(os.path.abspath(filename))
    count = 0
    with kromaticLogging.LogTimer('Caching fingerprints in %s' % filename) \
            as timer:
        lines = []
        for graph in graphs:
            g6 = to_graph6(canonical_graph(graph))
            if g6 in existing:
                continue
            existing[g6] = ksf_fingerprint(graph).digest()
            lines.append('%s\t%s\n' % (g6, existing[g6]))
        if lines:
            if not os.path.isdir(dirname):
                os.makedirs(dirname)
            with open(filename, 'a', encoding='ascii') as f:
                f.writelines(lines)
            count = len(lines)
        timer.summary = '%i new entries' % count
    return count
