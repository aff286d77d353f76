# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module kromatic.graphs.canonical

Canonical labeling, isomorphism and automorphisms.

The canonical code of a graph is the lexicographically least upper
triangle bit string x(0,1) x(0,2) x(1,2) x(0,3) ... over all vertex
orderings. The bits of column k are the adjacencies of the vertex at
position k to the vertices at positions 0..k-1, so the code is fixed
column by column: vertices are placed one position at a time, and at each
position only the candidates with the least column survive. Partial
orderings that leave the same remaining vertices with the same
adjacencies to the placed positions have the same best completion and are
merged; twin candidates are tried only once.

"""

import itertools

import kromatic
from kromatic.misc import CapacityError, InputError, iter_bits, popcount
from kromatic.graphs import Graph, relabel


class CanonicalForm(object):
    """ CanonicalForm(code, perm)

    The canonical code of a graph (a string of '0' and '1') and a
    permutation achieving it: relabel(G, perm) is the canonical graph,
    vertex i of G being placed at position perm[i].

    """

    __slots__ = ['_code', '_perm']

    def __init__(self, code, perm):
        self._code = code
        self._perm = tuple(perm)

    @property
    def code(self):
        return self._code

    @property
    def perm(self):
        return self._perm

    @property
    def n(self):
        return len(self._perm)

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self._code == other._code and self._perm == other._perm

    def __hash__(self):
        return hash((self._code, self._perm))

    def __repr__(self):
        return '<CanonicalForm n=%i code=%r>' % (self.n, self._code)


## Canonical labeling

def _canonical_order(n, adj, first=None):
    """ The vertex ordering with the least code; with first given, only
    orderings that start with that vertex are considered.
    """
    if n == 0:
        return []
    full = (1 << n) - 1
    if first is None:
        states = [((), full, [0] * n)]
        start = 0
    else:
        pm = [0] * n
        for r in iter_bits(adj[first]):
            pm[r] = 1 << (n - 1)
        states = [((first,), full & ~(1 << first), pm)]
        start = 1

    for level in range(start, n):
        # pm[r] has bit n-1-p set iff r is adjacent to the vertex at
        # position p, so a smaller pm means a lexicographically smaller
        # column.
        weight = 1 << (n - 1 - level)
        best = min(min(pm[c] for c in iter_bits(rem)) for _, rem, pm in states)
        merged = {}
        for order, rem, pm in states:
            kept = []
            for c in iter_bits(rem):
                if pm[c] != best:
                    continue
                if any(adj[c] & rem & ~(1 << d) == adj[d] & rem & ~(1 << c)
                       for d in kept):
                    continue  # twin of a candidate already tried
                kept.append(c)
                newrem = rem & ~(1 << c)
                newpm = list(pm)
                for r in iter_bits(adj[c] & newrem):
                    newpm[r] |= weight
                key = (newrem, tuple(newpm[r] for r in iter_bits(newrem)))
                if key not in merged:
                    merged[key] = (order + (c,), newrem, newpm)
        states = list(merged.values())

    return list(states[0][0])


def _code_of_order(adj, order):
    bits = []
    for k in range(1, len(order)):
        row = adj[order[k]]
        for i in range(k):
            bits.append('1' if row >> order[i] & 1 else '0')
    return ''.join(bits)


def canonical_form(G):
    """ canonical_form(G)
    Get the CanonicalForm of G (a Graph, or the graph of a WeightedGraph).
    """
    graph = G.graph
    order = _canonical_order(graph.n, graph.adj)
    perm = [0] * graph.n
    for position, v in enumerate(order):
        perm[v] = position
    return CanonicalForm(_code_of_order(graph.adj, order), perm)


def canonical_code(G):
    """ canonical_code(G)
    The canonical code of G as a string of '0' and '1'.
    """
    graph = G.graph
    return _code_of_order(graph.adj, _canonical_order(graph.n, graph.adj))


def canonical_graph(G):
    """ canonical_graph(G)
    The canonical relabeling of G.
    """
    return relabel(G.graph, canonical_form(G).perm)


def graph_from_code(n, code):
    """ graph_from_code(n, code)
    Decode an upper triangle bit string (in canonical column order) back
    into a Graph.
    """
    if len(code) != n * (n - 1) // 2:
        raise InputError('A code for %i vertices has %i bits, got %i'
                         % (n, n * (n - 1) // 2, len(code)))
    rows = [0] * n
    pos = 0
    for k in range(1, n):
        for i in range(k):
            bit = code[pos]
            if bit == '1':
                rows[i] |= 1 << k
                rows[k] |= 1 << i
            elif bit != '0':
                raise InputError('Invalid character %r in code' % bit)
            pos += 1
    return Graph._from_rows(n, rows)


def rooted_code(G, v):
    """ rooted_code(G, v)
    The least code over the orderings that place v first. Two vertices
    are in the same automorphism orbit iff their rooted codes are equal.
    """
    graph = G.graph
    graph._check_vertex(v)
    return _code_of_order(graph.adj, _canonical_order(graph.n, graph.adj, v))


def vertex_orbits(G):
    """ vertex_orbits(G)
    The orbits of the automorphism group on the vertices, as a list of
    ascending tuples ordered by their smallest vertex.
    """
    graph = G.graph
    groups = {}
    for v in range(graph.n):
        groups.setdefault(rooted_code(graph, v), []).append(v)
    return sorted(tuple(group) for group in groups.values())


## Isomorphism

def is_isomorphic(G, H):
    """ is_isomorphic(G, H)
    Whether the graphs of G and H are isomorphic (weights are ignored).
    """
    g, h = G.graph, H.graph
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_code(g) == canonical_code(h)


def iter_automorphisms(G, allowed=None):
    """ iter_automorphisms(G, allowed=None)

    Generate the automorphisms of G as tuples p with p[i] the image of
    vertex i, in lexicographic order. The optional allowed dict maps
    vertices to the collection of images they may take, which restricts
    the search to automorphisms satisfying those constraints.

    """
    graph = G.graph
    n, adj = graph.n, graph.adj
    degrees = [popcount(row) for row in adj]
    allowed = allowed or {}
    image = [0] * n

    def extend(i, used):
        if i == n:
            yield tuple(image)
            return
        candidates = sorted(allowed[i]) if i in allowed else range(n)
        row = adj[i]
        for j in candidates:
            if used >> j & 1 or degrees[j] != degrees[i]:
                continue
            rowj = adj[j]
            if all((row >> k & 1) == (rowj >> image[k] & 1) for k in range(i)):
                image[i] = j
                yield from extend(i + 1, used | (1 << j))

    return extend(0, 0)


def automorphisms(G):
    """ automorphisms(G)
    List all automorphisms of G, identity first. Raises CapacityError
    beyond the configured bound on n.
    """
    bound = int(kromatic.config.settings.maxAutomorphismN)
    if G.n > bound:
        raise CapacityError('Automorphism listing is limited to %i vertices'
                            % bound)
    return list(iter_automorphisms(G))


def min_edge_deletions_to_isomorphic(G, H, k_max):
    """ min_edge_deletions_to_isomorphic(G, H, k_max)

    The least t <= k_max such that deleting some t edges of G and some t
    edges of H gives isomorphic graphs, or None. Graphs with different
    edge counts never become isomorphic this way.

    """
    g, h = G.graph, H.graph
    if g.n != h.n:
        raise InputError('Graphs have %i and %i vertices' % (g.n, h.n))
    if g.edge_count() != h.edge_count():
        return None
    edges_g, edges_h = g.edges(), h.edges()
    for t in range(0, min(k_max, len(edges_g)) + 1):
        codes_g = {_code_without(g, removed)
                   for removed in itertools.combinations(edges_g, t)}
        for removed in itertools.combinations(edges_h, t):
            if _code_without(h, removed) in codes_g:
                return t
    return None


def _code_without(graph, removed):
    rows = list(graph.adj)
    for i, j in removed:
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)
    return _code_of_order(rows, _canonical_order(graph.n, rows))
