# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Package kromatic.graphs

Value-semantic simple graphs on at most 62 vertices. A graph is stored as
a tuple of row masks: bit j of row i is set iff i and j are adjacent.
Vertex-weighted graphs wrap a graph together with a tuple of positive
integer weights. All operations return new objects.

"""

from kromatic.misc import InputError, CapacityError, popcount, iter_bits

MAX_VERTICES = 62


def _check_n(n):
    if not isinstance(n, int) or n < 0:
        raise InputError('Vertex count must be a nonnegative int, got %r' % n)
    if n > MAX_VERTICES:
        raise CapacityError('At most %i vertices are supported, got %i'
                            % (MAX_VERTICES, n))


class Graph(object):
    """ Graph(n, adj=None)

    A finite simple graph with vertices 0..n-1. adj is a sequence of n row
    masks; it is validated (symmetric, no loops, no bits beyond n). When
    omitted the graph has no edges.

    """

    __slots__ = ['_n', '_adj', '_hash']

    def __init__(self, n, adj=None):
        _check_n(n)
        if adj is None:
            adj = (0,) * n
        adj = tuple(int(row) for row in adj)
        if len(adj) != n:
            raise InputError('Expected %i rows, got %i' % (n, len(adj)))
        full = (1 << n) - 1
        for i, row in enumerate(adj):
            if row < 0 or row & ~full:
                raise InputError('Row %i has bits beyond vertex %i'
                                 % (i, n - 1))
            if row >> i & 1:
                raise InputError('Self-loop at vertex %i' % i)
            for j in iter_bits(row):
                if not adj[j] >> i & 1:
                    raise InputError('Adjacency not symmetric at (%i, %i)'
                                     % (i, j))
        self._n = n
        self._adj = adj
        self._hash = None

    @classmethod
    def _from_rows(cls, n, adj):
        """ Construct without validation, for rows known to be valid.
        """
        g = cls.__new__(cls)
        g._n = n
        g._adj = tuple(adj)
        g._hash = None
        return g

    @property
    def n(self):
        """ The number of vertices.
        """
        return self._n

    @property
    def adj(self):
        """ The tuple of row masks.
        """
        return self._adj

    @property
    def graph(self):
        """ The underlying unweighted graph (self).
        """
        return self

    @property
    def weights(self):
        """ The vertex weights; all 1 for an unweighted graph.
        """
        return (1,) * self._n

    def __len__(self):
        return self._n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self):
        edges = ' '.join('%i-%i' % e for e in self.edges())
        return '<Graph n=%i edges=[%s]>' % (self._n, edges)

    def has_edge(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self):
        """ edges()
        List of the edges (i, j) with i < j, in ascending order.
        """
        result = []
        for i, row in enumerate(self._adj):
            for j in iter_bits(row >> (i + 1)):
                result.append((i, i + 1 + j))
        return result

    def edge_count(self):
        return sum(popcount(row) for row in self._adj) // 2

    def degree(self, v):
        self._check_vertex(v)
        return popcount(self._adj[v])

    def neighbors(self, v):
        """ neighbors(v)
        Ascending list of the neighbors of v.
        """
        self._check_vertex(v)
        return list(iter_bits(self._adj[v]))

    def degree_sequence(self):
        """ degree_sequence()
        The degrees sorted in descending order.
        """
        return sorted((popcount(row) for row in self._adj), reverse=True)

    def _check_vertex(self, v):
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise InputError('Vertex %r out of range for n=%i' % (v, self._n))


class WeightedGraph(object):
    """ WeightedGraph(graph, weights)

    A graph together with one positive integer weight per vertex. The
    weight of a vertex counts how much it contributes to the degree of a
    color it uses.

    """

    __slots__ = ['_graph', '_weights']

    def __init__(self, graph, weights):
        if not isinstance(graph, Graph):
            raise InputError('WeightedGraph needs a Graph, got %r'
                             % type(graph).__name__)
        weights = tuple(weights)
        if len(weights) != graph.n:
            raise InputError('Expected %i weights, got %i'
                             % (graph.n, len(weights)))
        for w in weights:
            if not isinstance(w, int) or w < 1:
                raise InputError('Weights must be positive ints, got %r' % w)
        self._graph = graph
        self._weights = weights

    @property
    def graph(self):
        return self._graph

    @property
    def weights(self):
        return self._weights

    @property
    def n(self):
        return self._graph.n

    @property
    def adj(self):
        return self._graph.adj

    def total_weight(self):
        return sum(self._weights)

    def __len__(self):
        return self._graph.n

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._graph == other._graph and self._weights == other._weights

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash((self._graph, self._weights))

    def __repr__(self):
        edges = ' '.join('%i-%i' % e for e in self._graph.edges())
        return '<WeightedGraph n=%i weights=%r edges=[%s]>' % (
            self.n, self._weights, edges)


def weighted(G, weights=None):
    """ weighted(G, weights=None)
    Wrap G as a WeightedGraph; unit weights when none are given. A
    WeightedGraph without new weights is returned as is.
    """
    if isinstance(G, WeightedGraph):
        return G if weights is None else WeightedGraph(G.graph, weights)
    if weights is None:
        weights = (1,) * G.n
    return WeightedGraph(G, weights)


def _rewrap(G, graph, weights):
    """ Return graph as the same kind as G.
    """
    if isinstance(G, WeightedGraph):
        return WeightedGraph(graph, weights)
    return graph


## Constructors

def graph_from_edges(n, edges):
    """ graph_from_edges(n, edges)
    Create a Graph with vertices 0..n-1 and the given edges. Duplicates
    are tolerated; self-loops and out-of-range endpoints raise InputError.
    """
    _check_n(n)
    rows = [0] * n
    for edge in edges:
        i, j = edge
        for v in (i, j):
            if not isinstance(v, int) or not 0 <= v < n:
                raise InputError('Endpoint %r out of range for n=%i' % (v, n))
        if i == j:
            raise InputError('Self-loop at vertex %i' % i)
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph._from_rows(n, rows)


def empty_graph(n):
    """ empty_graph(n)
    The graph E_n with n vertices and no edges.
    """
    _check_n(n)
    return Graph._from_rows(n, (0,) * n)


def complete_graph(n):
    _check_n(n)
    full = (1 << n) - 1
    return Graph._from_rows(n, [full & ~(1 << i) for i in range(n)])


def path_graph(n):
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise InputError('A cycle needs at least 3 vertices, got %i' % n)
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k):
    """ star_graph(k)
    The star K_{1,k}, with the center as vertex 0. star_graph(3) is the
    claw.
    """
    return graph_from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_weighted(parts):
    """ complete_weighted(parts)
    The complete graph K_lambda whose vertex weights are the given parts.
    """
    parts = tuple(parts)
    return WeightedGraph(complete_graph(len(parts)), parts)


## Subgraphs and edits

def induced_subgraph(G, S):
    """ induced_subgraph(G, S)
    The subgraph induced by the vertex set S, its vertices renumbered in
    ascending order. Weights follow their vertices.
    """
    graph = G.graph
    mask = 0
    for v in S:
        graph._check_vertex(v)
        mask |= 1 << v
    sub = _induced(graph.n, graph.adj, mask)
    weights = G.weights
    return _rewrap(G, sub, [weights[v] for v in iter_bits(mask)])


def _induced(n, adj, mask):
    verts = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in iter_bits(adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph._from_rows(len(verts), rows)


def delete_vertex(G, v):
    """ delete_vertex(G, v)
    The graph G - v; the vertices above v shift down by one.
    """
    G.graph._check_vertex(v)
    return induced_subgraph(G, [u for u in range(G.n) if u != v])


def delete_vertices(G, vertices):
    vertices = set(vertices)
    for v in vertices:
        G.graph._check_vertex(v)
    return induced_subgraph(G, [u for u in range(G.n) if u not in vertices])


def add_edge(G, u, v):
    """ add_edge(G, u, v)
    Copy of G with the edge uv added (no-op if present).
    """
    graph = G.graph
    graph._check_vertex(u)
    graph._check_vertex(v)
    if u == v:
        raise InputError('Self-loop at vertex %i' % u)
    rows = list(graph.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return _rewrap(G, Graph._from_rows(graph.n, rows), G.weights)


def delete_edge(G, u, v):
    """ delete_edge(G, u, v)
    Copy of G with the edge uv removed (no-op if absent).
    """
    graph = G.graph
    graph._check_vertex(u)
    graph._check_vertex(v)
    if u == v:
        raise InputError('Self-loop at vertex %i' % u)
    rows = list(graph.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return _rewrap(G, Graph._from_rows(graph.n, rows), G.weights)


def complement(G):
    graph = G.graph
    full = (1 << graph.n) - 1
    rows = [full & ~row & ~(1 << i) for i, row in enumerate(graph.adj)]
    return _rewrap(G, Graph._from_rows(graph.n, rows), G.weights)


def relabel(G, perm):
    """ relabel(G, perm)
    The graph in which vertex i of G is called perm[i].
    """
    graph = G.graph
    n = graph.n
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise InputError('Not a permutation of 0..%i: %r' % (n - 1, perm))
    rows = [0] * n
    for i, row in enumerate(graph.adj):
        newrow = 0
        for j in iter_bits(row):
            newrow |= 1 << perm[j]
        rows[perm[i]] = newrow
    weights = [0] * n
    for i, w in enumerate(G.weights):
        weights[perm[i]] = w
    return _rewrap(G, Graph._from_rows(n, rows), weights)


## Products

def _combine(G, H, cross):
    n1, n2 = G.n, H.n
    _check_n(n1 + n2)
    low = ((1 << n1) - 1) if cross else 0
    high = (((1 << n2) - 1) << n1) if cross else 0
    rows = [row | high for row in G.graph.adj]
    rows += [(row << n1) | low for row in H.graph.adj]
    graph = Graph._from_rows(n1 + n2, rows)
    if isinstance(G, WeightedGraph) or isinstance(H, WeightedGraph):
        return WeightedGraph(graph, G.weights + H.weights)
    return graph


def disjoint_union(G, H):
    """ disjoint_union(G, H)
    G and H side by side, G's vertices first. The result is weighted if
    either operand is.
    """
    return _combine(G, H, False)


def join(G, H):
    """ join(G, H)
    The disjoint union plus every edge between V(G) and V(H).
    """
    return _combine(G, H, True)


def clan_graph(G, alpha):
    """ clan_graph(G, alpha)

    The alpha-clan graph of G: vertex i is blown up into a clique of
    alpha[i] copies that keep the weight of vertex i. Copies of equal or
    adjacent vertices are adjacent. Copies of vertex i are numbered
    consecutively, in the order of i.

    """
    alpha = tuple(alpha)
    n = G.n
    if len(alpha) != n:
        raise InputError('Composition needs %i parts, got %i' % (n, len(alpha)))
    for a in alpha:
        if not isinstance(a, int) or a < 1:
            raise InputError('Composition parts must be >= 1, got %r' % (a,))
    total = sum(alpha)
    _check_n(total)
    offsets = []
    blocks = []
    offset = 0
    for a in alpha:
        offsets.append(offset)
        blocks.append(((1 << a) - 1) << offset)
        offset += a
    adj = G.graph.adj
    rows = []
    weights = []
    for i in range(n):
        reach = blocks[i]
        for j in iter_bits(adj[i]):
            reach |= blocks[j]
        for k in range(alpha[i]):
            vertex = offsets[i] + k
            rows.append(reach & ~(1 << vertex))
            weights.append(G.weights[i])
    return WeightedGraph(Graph._from_rows(total, rows), weights)
