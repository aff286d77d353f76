# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module kromatic.ksf.constructions

Builders and checkers for the constructions that produce graphs with the
same Kromatic or chromatic symmetric function, and the criteria that tell
the resulting pairs apart.

* attach_except / attach_to_vertex: attach a graph H to all vertices but
  one, or to one vertex only.
* Orellana-Scott instances (OSInstance): four vertices u, v, w, z with
  uz, wz, vw edges, uw and vz non-edges, and an automorphism of G - wz
  exchanging {u, w} and {v, z}. Then G + uw and G + vz have the same
  chromatic symmetric function.
* Split graph instances (ACSZInstance): two non-edges uv and u'v' with u,
  u' in one automorphism orbit and v, v' in one orbit. The split graphs
  of G + uv and G + u'v' then have the same chromatic symmetric function.

"""

import functools
import json
import os

from kromatic.misc import (InputError, PreconditionError, CacheError,
                           iter_bits, popcount)
from kromatic.graphs import (Graph, MAX_VERTICES, CapacityError, add_edge,
                             delete_edge, delete_vertex, delete_vertices,
                             disjoint_union, empty_graph, graph_from_edges)
from kromatic.graphs.canonical import (canonical_code, is_isomorphic,
                                       iter_automorphisms, rooted_code)
from kromatic.graphs.generate import generate_all
from kromatic.graphs.graph6 import to_graph6, from_graph6
from kromatic.ksf.independence import (Polynomial, ksf_fingerprint,
                                       count_induced_copies,
                                       find_graphs_with_polynomial)
from kromatic.ksf.partitions import ones
from kromatic.ksf.series import SymSeries, KAUGMENTED, odot_product
from kromatic.ksf.covers import ksf_mbar_truncated, f_series
from kromatic.core import kromaticLogging

# The independence polynomial 1 + 7x + 15x^2 + 16x^3 + 9x^4 + 2x^5 that
# exactly two graphs on 7 vertices share.
H1_H2_POLYNOMIAL = Polynomial([1, 7, 15, 16, 9, 2])


## Attaching graphs

def _attach(G, H, targets):
    graph = disjoint_union(G.graph, H.graph)
    n = G.n
    hmask = ((1 << H.n) - 1) << n
    rows = list(graph.adj)
    for v in iter_bits(targets):
        rows[v] |= hmask
    for h in range(n, n + H.n):
        rows[h] |= targets
    return Graph._from_rows(graph.n, rows)


def attach_except(G, v, H):
    """ attach_except(G, v, H)
    The disjoint union of G and H plus all edges between V(H) and the
    vertices of G other than v.
    """
    G.graph._check_vertex(v)
    targets = ((1 << G.n) - 1) & ~(1 << v)
    return _attach(G, H, targets)


def attach_to_vertex(G, v, H):
    """ attach_to_vertex(G, v, H)
    The disjoint union of G and H plus all edges between V(H) and v.
    """
    G.graph._check_vertex(v)
    return _attach(G, H, 1 << v)


def gprime_series_formula(G, v, H, d):
    """ gprime_series_formula(G, v, H, d)

    The KSF of attach_except(G, v, H) in the K-augmented basis, truncated
    at d, assembled from pieces of G and H alone:
    (f(v, H+v) + X_H) . (f(v, G) + X_(G-v)) . (m-_1 + 1) - X_H . X_(G-v)
    with . the odot product and H+v the disjoint union of H and a single
    vertex v.

    """
    G.graph._check_vertex(v)
    hv = disjoint_union(H, empty_graph(1))
    x_h = ksf_mbar_truncated(H, d)
    x_gv = ksf_mbar_truncated(delete_vertex(G, v), d)
    one_plus_m1 = SymSeries(KAUGMENTED, d, {(): 1, ones(1): 1})
    left = odot_product(f_series(hv, H.n, d) + x_h, f_series(G, v, d) + x_gv)
    return odot_product(left, one_plus_m1) - odot_product(x_h, x_gv)


def find_ksf_equal_vertex_pairs(G1, G2):
    """ find_ksf_equal_vertex_pairs(G1, G2)
    All pairs (v1, v2) for which G1 - v1 and G2 - v2 have the same KSF.
    """
    if G1.n != G2.n:
        raise InputError('Graphs have %i and %i vertices' % (G1.n, G2.n))
    prints1 = [ksf_fingerprint(delete_vertex(G1, v)) for v in range(G1.n)]
    prints2 = [ksf_fingerprint(delete_vertex(G2, v)) for v in range(G2.n)]
    return [(v1, v2) for v1, f1 in enumerate(prints1)
            for v2, f2 in enumerate(prints2) if f1 == f2]


def find_attach_vertex_witness(G1, G2):
    """ find_attach_vertex_witness(G1, G2)

    Look for vertices v1 of G1 and v2 of G2 for which attaching graphs to
    the single vertex keeps the KSF equal. Each must have exactly two
    non-neighbors, and these must be adjacent (so the only stable sets
    through the vertex are itself and its two pairs); G1 - v1 must be
    isomorphic to G2 - v2, and the same after also deleting the
    non-neighbors. Returns (v1, (a1, b1), v2, (a2, b2)) or None.

    """
    if G1.n != G2.n:
        raise InputError('Graphs have %i and %i vertices' % (G1.n, G2.n))

    def candidates(G):
        full = (1 << G.n) - 1
        for v in range(G.n):
            others = full & ~G.adj[v] & ~(1 << v)
            if popcount(others) != 2:
                continue
            a, b = iter_bits(others)
            if G.adj[a] >> b & 1:
                yield v, (a, b)

    for v1, pair1 in candidates(G1):
        for v2, pair2 in candidates(G2):
            if not is_isomorphic(delete_vertex(G1, v1), delete_vertex(G2, v2)):
                continue
            if is_isomorphic(delete_vertices(G1, (v1,) + pair1),
                             delete_vertices(G2, (v2,) + pair2)):
                return v1, pair1, v2, pair2
    return None


## Split graphs

def split_graph(G):
    """ split_graph(G)
    The split graph of G: its vertices made into a clique, plus one hat
    vertex per edge ij adjacent to exactly i and j. Hats follow the
    original vertices in ascending edge order.
    """
    graph = G.graph
    n = graph.n
    edges = graph.edges()
    total = n + len(edges)
    if total > MAX_VERTICES:
        raise CapacityError('Split graph would have %i vertices' % total)
    full = (1 << n) - 1
    rows = [full & ~(1 << i) for i in range(n)] + [0] * len(edges)
    for k, (i, j) in enumerate(edges):
        hat = n + k
        rows[hat] = (1 << i) | (1 << j)
        rows[i] |= 1 << hat
        rows[j] |= 1 << hat
    return Graph._from_rows(total, rows)


class ACSZInstance(object):
    """ ACSZInstance(G, u, v, u2, v2, distinguishing=None)

    Two non-edges uv and u2v2 of G (u2, v2 standing for u', v'), where
    some automorphism maps u to u2 and some automorphism maps v to v2.

    """

    __slots__ = ['_graph', '_vertices', 'distinguishing']

    kind = 'acsz'

    def __init__(self, G, u, v, u2, v2, distinguishing=None):
        self._graph = G.graph
        self._vertices = (u, v, u2, v2)
        self.distinguishing = distinguishing

    @property
    def graph(self):
        return self._graph

    @property
    def vertices(self):
        return self._vertices

    @property
    def u(self):
        return self._vertices[0]

    @property
    def v(self):
        return self._vertices[1]

    @property
    def u2(self):
        return self._vertices[2]

    @property
    def v2(self):
        return self._vertices[3]

    def to_record(self):
        return {'g6': to_graph6(self._graph), 'vertices': list(self._vertices),
                'kind': self.kind, 'distinguishing': self.distinguishing}

    def __repr__(self):
        return '<ACSZInstance %s u,v=%i,%i u\',v\'=%i,%i>' % (
            (to_graph6(self._graph),) + self._vertices)


def _check_range(G, vertices):
    for x in vertices:
        G._check_vertex(x)


def check_acsz(inst):
    """ check_acsz(inst)
    Whether uv and u'v' are non-edges between distinct vertices, u and u'
    share an automorphism orbit, and v and v' share one.
    """
    G = inst.graph
    u, v, u2, v2 = inst.vertices
    _check_range(G, inst.vertices)
    if u == v or u2 == v2:
        return False
    if G.adj[u] >> v & 1 or G.adj[u2] >> v2 & 1:
        return False
    if rooted_code(G, u) != rooted_code(G, u2):
        return False
    return rooted_code(G, v) == rooted_code(G, v2)


def _require(check, inst):
    if not check(inst):
        raise PreconditionError('%r does not pass %s' % (inst, check.__name__))


def acsz_pair(inst):
    """ acsz_pair(inst)
    The split graphs of G + uv and of G + u'v'.
    """
    _require(check_acsz, inst)
    G = inst.graph
    u, v, u2, v2 = inst.vertices
    return split_graph(add_edge(G, u, v)), split_graph(add_edge(G, u2, v2))


def check_acsz_distinguishing(inst):
    """ check_acsz_distinguishing(inst)

    Whether the split pair of a valid instance has different KSFs by the
    common neighbor criterion: u and v have a common neighbor, u' and v'
    have none, G has at least 6 vertices, and a common neighbor of u and
    v has degree at least 3 or u or v has degree at least 2.

    """
    _require(check_acsz, inst)
    G = inst.graph
    u, v, u2, v2 = inst.vertices
    adj = G.adj
    common = adj[u] & adj[v]
    if not common or adj[u2] & adj[v2] or G.n < 6:
        return False
    if any(popcount(adj[x]) >= 3 for x in iter_bits(common)):
        return True
    return popcount(adj[u]) >= 2 or popcount(adj[v]) >= 2


@functools.lru_cache(maxsize=None)
def h1_h2():
    """ h1_h2()
    The graphs on 7 vertices with independence polynomial
    1 + 7x + 15x^2 + 16x^3 + 9x^4 + 2x^5, found by search.
    """
    return tuple(find_graphs_with_polynomial(7, H1_H2_POLYNOMIAL))


def count_h1_h2(G):
    """ count_h1_h2(G)
    The number of induced copies of either of the two graphs of h1_h2().
    """
    if G.n < 7:
        return 0
    return sum(count_induced_copies(G, H) for H in h1_h2())


## Orellana-Scott instances

class OSInstance(object):
    """ OSInstance(G, u, v, w, z, distinguishing=None)

    Four vertices of G with uz, wz, vw edges and uw, vz non-edges.

    """

    __slots__ = ['_graph', '_vertices', 'distinguishing']

    kind = 'os'

    def __init__(self, G, u, v, w, z, distinguishing=None):
        self._graph = G.graph
        self._vertices = (u, v, w, z)
        self.distinguishing = distinguishing

    @property
    def graph(self):
        return self._graph

    @property
    def vertices(self):
        return self._vertices

    @property
    def u(self):
        return self._vertices[0]

    @property
    def v(self):
        return self._vertices[1]

    @property
    def w(self):
        return self._vertices[2]

    @property
    def z(self):
        return self._vertices[3]

    def to_record(self):
        return {'g6': to_graph6(self._graph), 'vertices': list(self._vertices),
                'kind': self.kind, 'distinguishing': self.distinguishing}

    def __repr__(self):
        return '<OSInstance %s u,v,w,z=%i,%i,%i,%i>' % (
            (to_graph6(self._graph),) + self._vertices)


def _os_pattern(inst):
    G = inst.graph
    u, v, w, z = inst.vertices
    _check_range(G, inst.vertices)
    if len(set(inst.vertices)) != 4:
        raise InputError('The four vertices must be distinct, got %r'
                         % (inst.vertices,))
    adj = G.adj
    edges = adj[u] >> z & 1 and adj[w] >> z & 1 and adj[v] >> w & 1
    nonedges = not adj[u] >> w & 1 and not adj[v] >> z & 1
    return bool(edges and nonedges)


def find_os_automorphism(inst, fixing=False):
    """ find_os_automorphism(inst, fixing=False)
    An automorphism of G - wz that exchanges {u, w} and {v, z}, or None.
    With fixing, only phi(u)=z, phi(z)=u, phi(w)=v, phi(v)=w qualifies.
    """
    u, v, w, z = inst.vertices
    reduced = delete_edge(inst.graph, w, z)
    if fixing:
        allowed = {u: (z,), z: (u,), w: (v,), v: (w,)}
    else:
        allowed = {u: (v, z), w: (v, z), v: (u, w), z: (u, w)}
    for phi in iter_automorphisms(reduced, allowed):
        return phi
    return None


def check_os(inst):
    """ check_os(inst)
    Whether the edge pattern holds and G - wz has an automorphism that
    exchanges {u, w} and {v, z}.
    """
    if not _os_pattern(inst):
        return False
    return find_os_automorphism(inst) is not None


def os_uv_adjacent(inst):
    """ os_uv_adjacent(inst)
    Whether u and v are adjacent; reported alongside instances, not
    required by check_os.
    """
    return bool(inst.graph.adj[inst.u] >> inst.v & 1)


def os_pair(inst):
    """ os_pair(inst)
    The graphs G + uw and G + vz.
    """
    _require(check_os, inst)
    G = inst.graph
    u, v, w, z = inst.vertices
    return add_edge(G, u, w), add_edge(G, v, z)


def os_claw_margin(inst):
    """ os_claw_margin(inst)

    The two neighbor counts of the claw criterion, read in G and over
    vertices other than u, v, w, z:
    left = #{x~w: x!~u, x!~v} + #{x~w: x!~z, x!~v}
    right = #{x~z: x!~u, x!~v} + #{x~z: x!~u, x!~w}
    Needs an automorphism with phi(u)=z, phi(z)=u, phi(w)=v, phi(v)=w.
    When left != right the pair of os_pair has different KSFs.

    """
    _require(check_os, inst)
    if find_os_automorphism(inst, fixing=True) is None:
        raise PreconditionError('%r has no automorphism swapping u with z '
                                'and w with v' % inst)
    adj = inst.graph.adj
    u, v, w, z = inst.vertices
    others = ((1 << inst.graph.n) - 1) & ~(1 << u | 1 << v | 1 << w | 1 << z)
    nw, nz = adj[w] & others, adj[z] & others
    left = popcount(nw & ~adj[u] & ~adj[v]) + popcount(nw & ~adj[z] & ~adj[v])
    right = popcount(nz & ~adj[u] & ~adj[v]) + popcount(nz & ~adj[u] & ~adj[w])
    return left, right


def os_distinguishing(inst):
    """ os_distinguishing(inst)
    Whether the claw criterion applies and predicts different KSFs.
    """
    if find_os_automorphism(inst, fixing=True) is None:
        return False
    left, right = os_claw_margin(inst)
    return left != right


def os_tree_family(T1, r1, T2, r2):
    """ os_tree_family(T1, r1, T2, r2)

    The unicyclic family of instances: a path u-z-w-v, with a copy of the
    rooted tree (T1, r1) glued by its root at u and at z, and a copy of
    (T2, r2) glued at w and at v. Vertices u, z, w, v are 0, 1, 2, 3,
    followed by the other vertices of the four copies.

    """
    T1.graph._check_vertex(r1)
    T2.graph._check_vertex(r2)
    total = 4 + 2 * (T1.n - 1) + 2 * (T2.n - 1)
    if total > MAX_VERTICES:
        raise CapacityError('Tree family graph would have %i vertices' % total)
    edges = [(0, 1), (1, 2), (2, 3)]
    offset = 4
    for tree, root, anchors in ((T1, r1, (0, 1)), (T2, r2, (2, 3))):
        others = [x for x in range(tree.n) if x != root]
        for anchor in anchors:
            label = {root: anchor}
            for x in others:
                label[x] = offset
                offset += 1
            for a, b in tree.graph.edges():
                edges.append((label[a], label[b]))
    G = graph_from_edges(total, edges)
    return OSInstance(G, 0, 3, 2, 1)


## Scans

def _scan_sizes(max_n):
    return range(4, max_n + 1)


def find_os_instances(max_n):
    """ find_os_instances(max_n)
    All valid OSInstances on canonical graphs with 4..max_n vertices, one
    per graph and unordered choice of {u, w} and {v, z}, with their
    distinguishing flag set.
    """
    result = []
    with kromaticLogging.LogTimer('Scanning OS instances up to n=%i' % max_n) \
            as timer:
        for n in _scan_sizes(max_n):
            for G in generate_all(n):
                result.extend(_os_instances_of(G))
        timer.summary = '%i instances' % len(result)
    return result


def _os_instances_of(G):
    adj = G.adj
    seen = set()
    found = []
    for z in range(G.n):
        for u in iter_bits(adj[z]):
            for w in iter_bits(adj[z]):
                if w == u or adj[u] >> w & 1:
                    continue
                for v in iter_bits(adj[w]):
                    if v in (u, z) or adj[v] >> z & 1:
                        continue
                    key = (frozenset((u, w)), frozenset((v, z)))
                    if key in seen:
                        continue
                    inst = OSInstance(G, u, v, w, z)
                    if find_os_automorphism(inst) is None:
                        continue
                    seen.add(key)
                    inst.distinguishing = os_distinguishing(inst)
                    found.append(inst)
    return found


def find_acsz_instances(max_n):
    """ find_acsz_instances(max_n)
    The nontrivial ACSZInstances on canonical graphs with 4..max_n
    vertices: u != v, u' != v', {u, v} != {u', v'} and G + uv not
    isomorphic to G + u'v'. One instance is kept per graph and ordered
    pair of resulting classes.
    """
    result = []
    with kromaticLogging.LogTimer('Scanning split graph instances up to '
                                  'n=%i' % max_n) as timer:
        for n in _scan_sizes(max_n):
            for G in generate_all(n):
                result.extend(_acsz_instances_of(G))
        timer.summary = '%i instances' % len(result)
    return result


def _acsz_instances_of(G):
    n, adj = G.n, G.adj
    orbit = {}
    for v in range(n):
        orbit.setdefault(rooted_code(G, v), []).append(v)
    orbit_of = {v: members for members in orbit.values() for v in members}
    codes = {}

    def code_plus(a, b):
        key = (min(a, b), max(a, b))
        if key not in codes:
            codes[key] = canonical_code(add_edge(G, a, b))
        return codes[key]

    seen = set()
    found = []
    for u in range(n):
        for v in range(n):
            if u == v or adj[u] >> v & 1:
                continue
            for u2 in orbit_of[u]:
                for v2 in orbit_of[v]:
                    if u2 == v2 or adj[u2] >> v2 & 1:
                        continue
                    if {u, v} == {u2, v2}:
                        continue
                    c1, c2 = code_plus(u, v), code_plus(u2, v2)
                    if c1 == c2 or (c1, c2) in seen:
                        continue
                    seen.add((c1, c2))
                    inst = ACSZInstance(G, u, v, u2, v2)
                    inst.distinguishing = check_acsz_distinguishing(inst)
                    found.append(inst)
    return found


## Registry files

def save_instances(filename, instances):
    """ save_instances(filename, instances)
    Write instances as JSON lines. Returns the number written.
    """
    dirname = os.path.dirname(os.path.abspath(filename))
    if not os.path.isdir(dirname):
        os.makedirs(dirname)
    count = 0
    with open(filename, 'w', encoding='utf-8') as f:
        for inst in instances:
            f.write(json.dumps(inst.to_record(), sort_keys=True) + '\n')
            count += 1
    return count


def instance_from_record(record):
    """ instance_from_record(record)
    Rebuild an OSInstance or ACSZInstance from its JSON record.
    """
    graph = from_graph6(record['g6'])
    vertices = [int(x) for x in record['vertices']]
    if len(vertices) != 4:
        raise InputError('Expected 4 vertices, got %r' % (vertices,))
    kind = record['kind']
    if kind == OSInstance.kind:
        cls = OSInstance
    elif kind == ACSZInstance.kind:
        cls = ACSZInstance
    else:
        raise InputError('Unknown instance kind %r' % kind)
    _check_range(graph, vertices)
    return cls(graph, *vertices, distinguishing=record.get('distinguishing'))


def load_instances(filename):
    """ load_instances(filename)
    Read the instances of a registry file. A line that cannot be parsed
    raises CacheError with its line number.
    """
    result = []
    with open(filename, 'rb') as f:
        for i, line in enumerate(f):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line.decode('utf-8'))
                result.append(instance_from_record(record))
            except (ValueError, KeyError, TypeError) as err:
                raise CacheError(filename, i + 1, str(err))
    return result
