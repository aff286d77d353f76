# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module kromatic.ksf.independence

Independence polynomials, KSF fingerprints, the independence-uniqueness
census and induced pattern counting.

Two graphs have the same Kromatic symmetric function iff the multisets
of independence polynomials of their induced subgraphs agree. That
multiset is the Fingerprint computed here; it is the exact equality test
used by the search.

Polynomials are handled internally as packed ints, one fixed-width slot
per coefficient, so that adding polynomials and multiplying by x are
single int operations.

"""

import collections
import hashlib
import itertools

import kromatic
from kromatic.misc import (CapacityError, InputError, iter_bits, popcount,
                           mask_of)
from kromatic.graphs import _induced
from kromatic.graphs.canonical import canonical_code
from kromatic.graphs.generate import generate_all


def slot_width(n):
    """ slot_width(n)
    The slot width that holds every independence polynomial coefficient
    of a graph on n vertices: they are at most C(n, k) < 2**(n + 1).
    """
    return n + 1


class Polynomial(object):
    """ Polynomial(coeffs)

    A polynomial with integer coefficients; coeffs[k] is the coefficient
    of x**k. Trailing zeros are dropped. Polynomials sort by degree, then
    by their coefficient vectors.

    """

    __slots__ = ['_coeffs']

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def from_packed(cls, value, slot):
        """ from_packed(value, slot)
        Unpack an int with one slot-bit field per coefficient.
        """
        mask = (1 << slot) - 1
        coeffs = []
        while value:
            coeffs.append(value & mask)
            value >>= slot
        return cls(coeffs)

    @classmethod
    def parse(cls, text):
        """ parse(text)
        Read a comma separated list of coefficients, constant term first,
        such as "1,7,15,16,9,2".
        """
        try:
            return cls([int(piece) for piece in text.split(',')])
        except ValueError:
            raise InputError('Cannot parse polynomial coefficients %r' % text)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        """ The degree; -1 for the zero polynomial.
        """
        return len(self._coeffs) - 1

    def sort_key(self):
        return (self.degree, self._coeffs)

    def packed(self, slot):
        value = 0
        for c in reversed(self._coeffs):
            if not 0 <= c < 1 << slot:
                raise InputError('Coefficient %i does not fit a %i bit slot'
                                 % (c, slot))
            value = (value << slot) | c
        return value

    def __call__(self, x):
        value = 0
        for c in reversed(self._coeffs):
            value = value * x + c
        return value

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        other = _as_polynomial(other)
        size = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (0,) * (size - len(self._coeffs))
        b = other._coeffs + (0,) * (size - len(other._coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-_as_polynomial(other))

    def __rsub__(self, other):
        return _as_polynomial(other) - self

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append('%i' % c)
            else:
                power = 'x' if k == 1 else 'x^%i' % k
                terms.append(power if c == 1 else '%i%s' % (c, power))
        return ' + '.join(terms) if terms else '0'

    def __repr__(self):
        return '<Polynomial %s>' % self


def _as_polynomial(ob):
    if isinstance(ob, Polynomial):
        return ob
    if isinstance(ob, int):
        return Polynomial([ob])
    return Polynomial(ob)


## Independence polynomials

def independence_polynomial(G):
    """ independence_polynomial(G)

    The independence polynomial of G, by the deletion recursion
    I(S) = I(S - v) + x I(S - N[v]) on vertex subsets S, memoized on the
    subset masks for this call.

    """
    graph = G.graph
    n, adj = graph.n, graph.adj
    slot = slot_width(n)
    memo = {0: 1}

    def rec(mask):
        try:
            return memo[mask]
        except KeyError:
            pass
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        value = rec(rest) + (rec(rest & ~adj[v]) << slot)
        memo[mask] = value
        return value

    return Polynomial.from_packed(rec((1 << n) - 1), slot)


def join_independence_polynomial(G, H):
    """ join_independence_polynomial(G, H)
    The independence polynomial of the join of G and H, from those of the
    factors: every nonempty independent set of the join lies in one side.
    """
    return independence_polynomial(G) + independence_polynomial(H) - 1


def _subset_polynomials(n, adj):
    """ Packed independence polynomials of G[S] for every subset mask S.
    """
    slot = slot_width(n)
    table = [0] * (1 << n)
    table[0] = 1
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        table[mask] = table[rest] + (table[rest & ~adj[v]] << slot)
    return table


## Fingerprints

class Fingerprint(object):
    """ Fingerprint(counts)

    The multiset of independence polynomials of the induced subgraphs of a
    graph, one entry per vertex subset (the empty subset included). counts
    maps each Polynomial to its multiplicity. Two graphs have equal
    Kromatic symmetric functions iff their Fingerprints are equal.

    """

    __slots__ = ['_entries', '_digest']

    def __init__(self, counts):
        entries = []
        for poly, mult in counts.items():
            if mult < 0:
                raise InputError('Negative multiplicity for %s' % poly)
            if mult:
                entries.append((_as_polynomial(poly), int(mult)))
        entries.sort(key=lambda item: item[0].sort_key())
        self._entries = tuple(entries)
        self._digest = None

    @property
    def entries(self):
        """ Tuple of (Polynomial, multiplicity), in canonical order.
        """
        return self._entries

    @property
    def polys(self):
        """ The sorted list of polynomials, with repetition.
        """
        result = []
        for poly, mult in self._entries:
            result.extend([poly] * mult)
        return result

    @property
    def size(self):
        return sum(mult for _, mult in self._entries)

    def count(self, poly):
        """ count(poly)
        The multiplicity of the given polynomial.
        """
        poly = _as_polynomial(poly)
        for p, mult in self._entries:
            if p == poly:
                return mult
        return 0

    def serialize(self):
        """ serialize()
        The canonical text form: "coeffs*multiplicity" items joined by ";".
        """
        return ';'.join('%s*%i' % (','.join(str(c) for c in poly.coeffs), mult)
                        for poly, mult in self._entries)

    def digest(self):
        """ digest()
        The 128-bit blake2b digest of the canonical serialization, as 32
        hex characters.
        """
        if self._digest is None:
            h = hashlib.blake2b(self.serialize().encode('ascii'),
                                digest_size=16)
            self._digest = h.hexdigest()
        return self._digest

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other):
        if not isinstance(other, Fingerprint):
            return NotImplemented
        return self._entries == other._entries

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return '<Fingerprint size=%i distinct=%i digest=%s>' % (
            self.size, len(self._entries), self.digest()[:8])


def _check_fingerprint_bound(n):
    bound = int(kromatic.config.settings.maxFingerprintN)
    if n > bound:
        raise CapacityError('Fingerprints are limited to %i vertices, got %i'
                            % (bound, n))


def ksf_fingerprint(G):
    """ ksf_fingerprint(G)
    The Fingerprint of G: the independence polynomials of G[S] over all
    2^n vertex subsets S.
    """
    graph = G.graph
    _check_fingerprint_bound(graph.n)
    slot = slot_width(graph.n)
    counts = collections.Counter(_subset_polynomials(graph.n, graph.adj))
    return Fingerprint({Polynomial.from_packed(p, slot): c
                        for p, c in counts.items()})


def fingerprint_digest(F):
    """ fingerprint_digest(F)
    The 32 hex character digest of a Fingerprint.
    """
    return F.digest()


def fingerprint_diff(F1, F2):
    """ fingerprint_diff(F1, F2)
    The multiset differences (F1 - F2, F2 - F1), each a list of
    (Polynomial, multiplicity) in canonical order.
    """
    c1 = collections.Counter(dict(F1.entries))
    c2 = collections.Counter(dict(F2.entries))
    only1 = Fingerprint(c1 - c2).entries
    only2 = Fingerprint(c2 - c1).entries
    return list(only1), list(only2)


## Census

def _polynomial_classes(n):
    classes = collections.defaultdict(list)
    for graph in generate_all(n):
        classes[independence_polynomial(graph)].append(graph)
    return classes


def independence_unique_count(n):
    """ independence_unique_count(n)
    The number of isomorphism classes on n vertices whose independence
    polynomial no other class on n vertices has.
    """
    return sum(1 for graphs in _polynomial_classes(n).values()
               if len(graphs) == 1)


def independence_unique_graphs(n):
    """ independence_unique_graphs(n)
    The canonical independence-unique graphs on n vertices, ascending by
    canonical code.
    """
    graphs = [graphs[0] for graphs in _polynomial_classes(n).values()
              if len(graphs) == 1]
    return sorted(graphs, key=canonical_code)


def find_graphs_with_polynomial(n, p):
    """ find_graphs_with_polynomial(n, p)
    All canonical graphs on n vertices with independence polynomial p
    (a Polynomial or a coefficient sequence).
    """
    p = _as_polynomial(p)
    return [graph for graph in generate_all(n)
            if independence_polynomial(graph) == p]


## Pattern counts

def count_induced_copies(G, P):
    """ count_induced_copies(G, P)
    The number of vertex subsets S of G with G[S] isomorphic to P. Each
    subset counts once, whatever the symmetries of P.
    """
    graph, pattern = G.graph, P.graph
    n, k = graph.n, pattern.n
    if k > n:
        return 0
    if k == 0:
        return 1
    pedges = pattern.edge_count()
    pdegrees = pattern.degree_sequence()
    pcode = None
    adj = graph.adj
    count = 0
    for combo in itertools.combinations(range(n), k):
        mask = mask_of(combo)
        degrees = sorted((popcount(adj[v] & mask) for v in combo),
                         reverse=True)
        if degrees != pdegrees:
            continue
        if sum(degrees) != 2 * pedges:
            continue
        if pcode is None:
            pcode = canonical_code(pattern)
        if canonical_code(_induced(n, adj, mask)) == pcode:
            count += 1
    return count


def count_claws(G):
    """ count_claws(G)
    The number of induced claws K_{1,3}: for every vertex, the number of
    independent triples among its neighbors.
    """
    adj = G.graph.adj
    count = 0
    for center, row in enumerate(adj):
        nbrs = list(iter_bits(row))
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if adj[a] >> b & 1:
                    continue
                above = row & ~((1 << (b + 1)) - 1)
                count += popcount(above & ~adj[a] & ~adj[b])
    return count


def count_from_fingerprint(F, P):
    """ count_from_fingerprint(F, P)

    The number of induced copies of P in the graph behind F, read off the
    fingerprint. This works for independence-unique P only: the induced
    subgraphs with polynomial I(P) are then exactly the copies of P.
    Other patterns raise InputError.

    """
    pattern = P.graph
    poly = independence_polynomial(pattern)
    if pattern.n > 0:
        classes = _polynomial_classes(pattern.n)
        if len(classes.get(poly, ())) != 1:
            raise InputError('Pattern is not independence-unique on %i '
                             'vertices' % pattern.n)
    return F.count(poly)
