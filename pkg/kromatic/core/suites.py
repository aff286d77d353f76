# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module suites

Verification suites. Each suite is a Task that checks one identity or
construction exhaustively over small graphs and returns a SuiteResult
with the number of checks and a description of every failure.

Available suites (see SUITES):

* f-identity: the vertex recursion of the truncated KSF through f(v, G),
  and the closed form of f(v, G).
* join / union: multiplicativity over joins (odot product) and over
  disjoint unions (ordinary product in the monomial basis).
* clan: the clan graph expansion, the cross-check of the m- expansion
  against direct set colorings, and the degree-n slice against the CSF.
* consistency: fingerprint equality and truncated series equality split
  the graphs on n vertices into the same classes.
* attach: the series formula for attaching a graph to all vertices but
  one.
* amplify: the constructions applied to the equal KSF pairs found by the
  search.
* os / split: the two equal CSF constructions and their distinguishing
  criteria, over all scanned instances.

"""

import kromatic
from kromatic.misc import InputError
from kromatic.graphs import (complete_graph, empty_graph, path_graph, join,
                             disjoint_union, delete_vertex)
from kromatic.graphs.canonical import canonical_code, is_isomorphic
from kromatic.graphs.generate import generate_all
from kromatic.graphs.graph6 import to_graph6
from kromatic.ksf.independence import (ksf_fingerprint, independence_polynomial,
                                       join_independence_polynomial,
                                       count_claws)
from kromatic.ksf.partitions import ones
from kromatic.ksf.series import (SymSeries, KAUGMENTED, MONOMIAL, convert,
                                 odot_product, ordinary_product)
from kromatic.ksf.covers import (ksf_mbar_truncated, ksf_monomial_truncated,
                                 f_series_all, f_series_closed_form,
                                 csf_mtilde, clan_expansion)
from kromatic.ksf import constructions
from kromatic.core import kromaticLogging
from kromatic.core.tasks import Task


class SuiteResult(object):
    """ SuiteResult(name)
    The outcome of a suite: the number of checks and the failures.
    """

    __slots__ = ['name', 'checked', 'failures']

    def __init__(self, name):
        self.name = name
        self.checked = 0
        self.failures = []

    def check(self, ok, description):
        self.checked += 1
        if not ok:
            self.failures.append(description)
        return ok

    @property
    def passed(self):
        return not self.failures

    def summary(self):
        status = 'passed' if self.passed else 'FAILED'
        return 'suite %s: %i checks, %i failures, %s' % (
            self.name, self.checked, len(self.failures), status)

    def __repr__(self):
        return '<SuiteResult %s %i/%i>' % (
            self.name, self.checked - len(self.failures), self.checked)


class Suite(Task):
    """ Suite(max_n=None, degree=None)
    Base class of the verification suites. Subclasses set name and
    default_max_n and implement check(result, max_n, degree).
    """
    __slots__ = []

    name = ''
    default_max_n = 6

    def __init__(self, max_n=None, degree=None):
        Task.__init__(self, max_n=max_n, degree=degree)

    def process(self, max_n=None, degree=None):
        if max_n is None:
            max_n = self.default_max_n
        result = SuiteResult(self.name)
        with kromaticLogging.LogTimer('Suite %s up to n=%i' % (self.name,
                                                               max_n)) as timer:
            self.check(result, max_n, degree)
            timer.summary = '%i checks, %i failures' % (result.checked,
                                                        len(result.failures))
        return result

    def check(self, result, max_n, degree):
        raise NotImplementedError()


def _graphs_up_to(max_n):
    for n in range(1, max_n + 1):
        for graph in generate_all(n):
            yield graph


def _pairs_up_to(total):
    # Unordered pairs of canonical graphs, at least one vertex each
    graphs = list(_graphs_up_to(total - 1)) if total > 1 else []
    for i, G in enumerate(graphs):
        for H in graphs[i:]:
            if G.n + H.n <= total:
                yield G, H


def _degree(n, degree):
    return kromatic.defaultDegree(n) if degree is None else degree


class FIdentitySuite(Suite):
    """ X_G = X_(G-v) . m-_1 + f(v, G) . (m-_1 + 1) for every graph and
    vertex, and f(v, G) equal to its closed form.
    """
    __slots__ = []
    name = 'f-identity'
    default_max_n = 6

    def check(self, result, max_n, degree):
        cache = {}

        def ksf_of(G, d):
            key = (G.n, canonical_code(G), d)
            if key not in cache:
                cache[key] = ksf_mbar_truncated(G, d)
            return cache[key]

        for G in kromaticLogging.progress(list(_graphs_up_to(max_n)),
                                          'f-identity'):
            d = _degree(G.n, degree)
            m1 = SymSeries(KAUGMENTED, d, {ones(1): 1})
            one_plus_m1 = m1 + 1
            ksf, fs = f_series_all(G, d)
            for v in range(G.n):
                rest = ksf_of(delete_vertex(G, v), d)
                rhs = odot_product(rest, m1) + odot_product(fs[v], one_plus_m1)
                result.check(ksf == rhs, 'recursion %s v=%i' % (to_graph6(G), v))
                if G.n <= 5:
                    result.check(f_series_closed_form(G, v, d) == fs[v],
                                 'closed form %s v=%i' % (to_graph6(G), v))


class JoinSuite(Suite):
    """ The KSF of a join is the odot product of the factors, and the
    independence polynomial of a join is I(G) + I(H) - 1.
    """
    __slots__ = []
    name = 'join'
    default_max_n = 6

    def check(self, result, max_n, degree):
        for G, H in _pairs_up_to(max_n):
            d = _degree(G.n + H.n, degree)
            label = '%s + %s' % (to_graph6(G), to_graph6(H))
            joined = join(G, H)
            product = odot_product(ksf_mbar_truncated(G, d),
                                   ksf_mbar_truncated(H, d))
            result.check(ksf_mbar_truncated(joined, d) == product,
                         'join series %s' % label)
            result.check(independence_polynomial(joined) ==
                         join_independence_polynomial(G, H),
                         'join polynomial %s' % label)


class UnionSuite(Suite):
    """ In the monomial basis the KSF of a disjoint union is the ordinary
    product of the factors.
    """
    __slots__ = []
    name = 'union'
    default_max_n = 6

    def check(self, result, max_n, degree):
        for G, H in _pairs_up_to(max_n):
            d = _degree(G.n + H.n, degree)
            union = disjoint_union(G, H)
            product = ordinary_product(ksf_monomial_truncated(G, d),
                                       ksf_monomial_truncated(H, d))
            result.check(convert(ksf_mbar_truncated(union, d), MONOMIAL) ==
                         product,
                         'union %s + %s' % (to_graph6(G), to_graph6(H)))


class ClanSuite(Suite):
    """ The clan graph expansion and the m- expansion both give the
    monomial expansion by set colorings; the degree-n part of the m-
    expansion matches the CSF.
    """
    __slots__ = []
    name = 'clan'
    default_max_n = 4

    def check(self, result, max_n, degree):
        for G in _graphs_up_to(max_n):
            d = G.n + 1 if degree is None else degree
            label = to_graph6(G)
            direct = ksf_monomial_truncated(G, d)
            mbar = ksf_mbar_truncated(G, d)
            result.check(clan_expansion(G, d) == direct, 'clan %s' % label)
            result.check(convert(mbar, MONOMIAL) == direct,
                         'covers vs colorings %s' % label)
            slice_n = ksf_mbar_truncated(G, G.n).degree_slice(G.n)
            csf = csf_mtilde(G)
            result.check(dict(slice_n.items()) == dict(csf.items()),
                         'lowest degree %s' % label)


class ConsistencySuite(Suite):
    """ Equal fingerprints and equal truncated series at n + degreeOffset
    induce the same classes of graphs on n vertices. Below 8 vertices every
    class is a single graph.
    """
    __slots__ = []
    name = 'consistency'
    default_max_n = 6

    def check(self, result, max_n, degree):
        for n in range(1, max_n + 1):
            d = _degree(n, degree)
            by_print, by_series = {}, {}
            for index, G in enumerate(generate_all(n)):
                by_print.setdefault(ksf_fingerprint(G), []).append(index)
                by_series.setdefault(ksf_mbar_truncated(G, d), []).append(index)
            classes1 = sorted(by_print.values())
            classes2 = sorted(by_series.values())
            result.check(classes1 == classes2, 'classes differ for n=%i' % n)
            if n < 8:
                result.check(all(len(c) == 1 for c in classes1),
                             'equal fingerprints for n=%i' % n)
                result.check(all(len(c) == 1 for c in classes2),
                             'equal series for n=%i' % n)


class AttachSuite(Suite):
    """ The series formula for attach_except against the direct cover
    expansion, for all G up to max_n, H with at most 2 vertices and every
    vertex v.
    """
    __slots__ = []
    name = 'attach'
    default_max_n = 4

    def check(self, result, max_n, degree):
        small = [empty_graph(0)] + list(_graphs_up_to(2))
        for G in _graphs_up_to(max_n):
            for H in small:
                d = _degree(G.n + H.n, degree)
                for v in range(G.n):
                    direct = ksf_mbar_truncated(
                        constructions.attach_except(G, v, H), d)
                    formula = constructions.gprime_series_formula(G, v, H, d)
                    result.check(direct == formula, 'attach %s v=%i H=%s' % (
                        to_graph6(G), v, to_graph6(H)))


class AmplifySuite(Suite):
    """ For each equal KSF pair found on max_n vertices: unions and joins
    with K_1 and K_2, attach_except over every vertex pair with equal KSF
    after deletion, and attach_to_vertex where a witness exists, all give
    nonisomorphic graphs with equal fingerprints. Every pair must also be
    certified by verify_pair.
    """
    __slots__ = []
    name = 'amplify'
    default_max_n = 8

    def check(self, result, max_n, degree):
        from kromatic.core.search import search_equal_ksf, verify_pair

        def same(A, B, label):
            result.check(ksf_fingerprint(A) == ksf_fingerprint(B) and
                         not is_isomorphic(A, B), label)

        small = [complete_graph(1), complete_graph(2)]
        attach = small + [empty_graph(2)]
        for report in search_equal_ksf(max_n):
            G1, G2 = report.graphs()
            label = '%s/%s' % (report.g1, report.g2)
            d = _degree(max_n, degree)
            result.check(verify_pair(G1, G2, d).certified, 'verify %s' % label)
            for H in small:
                same(disjoint_union(G1, H), disjoint_union(G2, H),
                     'union %s H=%s' % (label, to_graph6(H)))
                same(join(G1, H), join(G2, H),
                     'join %s H=%s' % (label, to_graph6(H)))
            for v1, v2 in constructions.find_ksf_equal_vertex_pairs(G1, G2):
                for H in attach:
                    same(constructions.attach_except(G1, v1, H),
                         constructions.attach_except(G2, v2, H),
                         'attach_except %s v=%i,%i H=%s' % (label, v1, v2,
                                                           to_graph6(H)))
            witness = constructions.find_attach_vertex_witness(G1, G2)
            if witness is not None:
                v1, _, v2, _ = witness
                for H in small + [path_graph(3)]:
                    same(constructions.attach_to_vertex(G1, v1, H),
                         constructions.attach_to_vertex(G2, v2, H),
                         'attach_to_vertex %s v=%i,%i H=%s' % (
                             label, v1, v2, to_graph6(H)))


class OSSuite(Suite):
    """ Every scanned Orellana-Scott instance gives a pair with equal CSF;
    where the claw criterion applies with unequal margins, the claw counts
    and the fingerprints differ.
    """
    __slots__ = []
    name = 'os'
    default_max_n = 7

    def check(self, result, max_n, degree):
        for inst in constructions.find_os_instances(max_n):
            H, J = constructions.os_pair(inst)
            result.check(csf_mtilde(H) == csf_mtilde(J), 'csf %r' % inst)
            if inst.distinguishing:
                result.check(count_claws(H) != count_claws(J),
                             'claws %r' % inst)
                result.check(ksf_fingerprint(H) != ksf_fingerprint(J),
                             'fingerprint %r' % inst)


class SplitSuite(Suite):
    """ Every scanned split graph instance with at most 12 vertices in the
    split graphs gives a pair with equal CSF; where the common neighbor
    criterion holds, G + uv has more induced copies of the two
    distinguishing graphs and the fingerprints differ.
    """
    __slots__ = []
    name = 'split'
    default_max_n = 6

    max_split_vertices = 12

    def check(self, result, max_n, degree):
        for inst in constructions.find_acsz_instances(max_n):
            G = inst.graph
            if G.n + G.edge_count() + 1 > self.max_split_vertices:
                continue
            S1, S2 = constructions.acsz_pair(inst)
            result.check(csf_mtilde(S1) == csf_mtilde(S2), 'csf %r' % inst)
            if inst.distinguishing:
                result.check(constructions.count_h1_h2(S1) >
                             constructions.count_h1_h2(S2), 'h1h2 %r' % inst)
                result.check(ksf_fingerprint(S1) != ksf_fingerprint(S2),
                             'fingerprint %r' % inst)


SUITES = dict((cls.name, cls) for cls in (
    FIdentitySuite, JoinSuite, UnionSuite, ClanSuite, ConsistencySuite,
    AttachSuite, AmplifySuite, OSSuite, SplitSuite))


def run_suite(name, max_n=None, degree=None):
    """ run_suite(name, max_n=None, degree=None)
    Run the named suite and return its SuiteResult. Errors inside the
    suite are raised here.
    """
    if name not in SUITES:
        raise InputError('Unknown suite %r, use one of %s'
                         % (name, ', '.join(SUITES)))
    return SUITES[name](max_n=max_n, degree=degree).run().result()
