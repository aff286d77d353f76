# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module kromatic.graphs.graph6

Reading and writing the graph6 format for graphs with at most 62
vertices: one byte n+63, then the upper triangle bits x(0,1), x(0,2),
x(1,2), x(0,3), ... packed big-endian into groups of 6, zero padded,
each group offset by 63.

"""

import os

from kromatic.misc import InputError
from kromatic.graphs import Graph, MAX_VERTICES

HEADER = '>>graph6<<'


def to_graph6(G):
    """ to_graph6(G)
    Encode the graph of G as a graph6 string (without newline).
    """
    graph = G.graph
    n, adj = graph.n, graph.adj
    chars = [chr(n + 63)]
    value = nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(value + 63))
                value = nbits = 0
    if nbits:
        chars.append(chr((value << (6 - nbits)) + 63))
    return ''.join(chars)


def from_graph6(text):
    """ from_graph6(text)
    Decode a graph6 string. Surrounding whitespace and the optional
    ">>graph6<<" header are ignored; anything else that is not exactly
    one valid small graph raises InputError.
    """
    if isinstance(text, bytes):
        text = text.decode('ascii', errors='replace')
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise InputError('Empty graph6 string')
    for c in text:
        if not 63 <= ord(c) <= 126:
            raise InputError('Invalid graph6 character %r' % c)
    n = ord(text[0]) - 63
    if n > MAX_VERTICES:
        raise InputError('graph6 strings for more than %i vertices are not '
                         'supported' % MAX_VERTICES)
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(text) != 1 + ngroups:
        raise InputError('graph6 string for %i vertices needs %i bytes, got '
                         '%i' % (n, 1 + ngroups, len(text)))
    value = 0
    for c in text[1:]:
        value = (value << 6) | (ord(c) - 63)
    padding = ngroups * 6 - nbits
    if value & ((1 << padding) - 1):
        raise InputError('Nonzero padding bits in graph6 string')
    value >>= padding
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph._from_rows(n, rows)


def iter_graph6_lines(lines):
    """ iter_graph6_lines(lines)
    Yield (linenr, graph) for the nonempty lines of a graph6 stream. Lines
    may be str or bytes; bytes that are not ASCII raise InputError.
    """
    for i, line in enumerate(lines):
        if isinstance(line, bytes):
            try:
                line = line.decode('ascii')
            except UnicodeDecodeError:
                raise InputError('line %i: not an ASCII graph6 line' % (i + 1))
        line = line.strip()
        if not line or line == HEADER:
            continue
        try:
            yield i + 1, from_graph6(line)
        except InputError as err:
            raise InputError('line %i: %s' % (i + 1, err))


def read_graph6_file(filename):
    """ read_graph6_file(filename)
    Read all graphs from a graph6 file, one graph per line.
    """
    with open(filename, 'rb') as f:
        return [graph for _, graph in iter_graph6_lines(f)]


def write_graph6_file(filename, graphs):
    """ write_graph6_file(filename, graphs)
    Write the graphs to a file, one graph6 line each. Returns the number
    of graphs written.
    """
    dirname = os.path.dirname(os.path.abspath(filename))
    if not os.path.isdir(dirname):
        os.makedirs(dirname)
    count = 0
    with open(filename, 'w', encoding='ascii') as f:
        for graph in graphs:
            f.write(to_graph6(graph) + '\n')
            count += 1
    return count
