# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module to deal with command line arguments.

Every subcommand is parsed by argparse and then dispatched by
handle_command, which writes its output (graph6 lines, JSON lines or
tab separated values) to stdout or to the file given with --out. Log
lines go to stderr.

Exit status: 0 when the command succeeded (for verify: when every check
passed), 1 when a verification suite failed, 2 on an error.

"""

import argparse
import contextlib
import json
import sys

import kromatic
from kromatic.misc import KromaticError, InputError
from kromatic.graphs import complete_graph, disjoint_union, join
from kromatic.graphs.generate import generate_all
from kromatic.graphs.graph6 import to_graph6, from_graph6, read_graph6_file
from kromatic.ksf.independence import (ksf_fingerprint,
                                       independence_unique_count,
                                       independence_unique_graphs)
from kromatic.ksf import constructions
from kromatic.core import kromaticLogging
from kromatic.core import search, suites

OPS = ('union', 'join', 'attach-except', 'attach-vertex', 'split')


def build_parser():
    """ build_parser()
    The argparse parser with all subcommands.
    """
    parser = argparse.ArgumentParser(
        prog='kromatic',
        description='Exact computations with the Kromatic symmetric function.')
    parser.add_argument('--version', action='version',
                        version='kromatic ' + kromatic.__version__)
    parser.add_argument('--quiet', action='store_true',
                        help='do not log progress to stderr')
    parser.add_argument('--workers', type=int, default=None,
                        help='worker processes (default from config)')
    parser.add_argument('--degree', type=int, default=None,
                        help='degree bound of truncated series '
                             '(default n + settings.degreeOffset)')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    def add(name, help, out=True):
        p = sub.add_parser(name, help=help)
        # also accepted after the command; overrides the global flag
        p.add_argument('--degree', type=int, default=argparse.SUPPRESS,
                       help=argparse.SUPPRESS)
        if out:
            p.add_argument('--out', default=None,
                           help='output file (default stdout)')
        return p

    p = add('gen', 'list all graphs on n vertices as graph6')
    p.add_argument('--n', type=int, required=True)

    p = add('fingerprint', 'print "g6<TAB>digest" for the graphs of a file')
    p.add_argument('--in', dest='infile', required=True)

    p = add('search-equal-ksf', 'find nonisomorphic graphs with equal KSF')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--verify', action='store_true',
                   help='emit the verification record of each pair too')

    p = add('indunique-count', 'count independence-unique graphs')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--list', action='store_true',
                   help='list the graphs instead of counting them')

    p = add('census', 'count induced copies of a pattern')
    p.add_argument('--pattern', required=True, help='pattern as graph6')
    p.add_argument('--in', dest='infile', required=True)

    p = add('construct', 'build a graph from a construction')
    p.add_argument('--op', choices=OPS, required=True)
    p.add_argument('--g', required=True, help='graph G as graph6')
    p.add_argument('--h', default=None, help='graph H as graph6 (default K_1)')
    p.add_argument('--v', type=int, default=0, help='vertex of G')

    for name, what in (('find-os', 'Orellana-Scott'),
                       ('find-acsz', 'split graph')):
        p = add(name, 'scan for %s instances' % what)
        p.add_argument('--max-n', type=int, default=None)

    p = add('verify', 'run a verification suite', out=False)
    p.add_argument('--suite', choices=sorted(suites.SUITES), required=True)
    p.add_argument('--max-n', type=int, default=None)

    p = add('cache', 'fill the fingerprint cache for n vertices', out=False)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--file', default=None,
                   help='cache file (default in the cache directory)')

    return parser


@contextlib.contextmanager
def _output(args, stdout):
    filename = getattr(args, 'out', None)
    if filename:
        with open(filename, 'w', encoding='utf-8') as f:
            yield f
    else:
        yield stdout


def handle_command(args, stdout=None):
    """ handle_command(args, stdout=None)
    Execute the parsed command. Returns the exit status.
    """
    stdout = stdout or sys.stdout
    command = args.command
    workers = args.workers

    if command == 'verify':
        result = suites.run_suite(args.suite, args.max_n, args.degree)
        for failure in result.failures:
            stdout.write('failed: %s\n' % failure)
        stdout.write(result.summary() + '\n')
        return 0 if result.passed else 1

    elif command == 'cache':
        filename = args.file or search.default_cache_file(args.n)
        count = search.cache_fingerprints(generate_all(args.n, workers),
                                          filename)
        stdout.write('%i entries written to %s\n' % (count, filename))
        return 0

    with _output(args, stdout) as out:

        if command == 'gen':
            for graph in generate_all(args.n, workers):
                out.write(to_graph6(graph) + '\n')

        elif command == 'fingerprint':
            for graph in read_graph6_file(args.infile):
                digest = ksf_fingerprint(graph).digest()
                out.write('%s\t%s\n' % (to_graph6(graph), digest))

        elif command == 'search-equal-ksf':
            for report in search.search_equal_ksf(args.n, workers):
                out.write(report.to_json() + '\n')
                if args.verify:
                    G1, G2 = report.graphs()
                    record = search.verify_pair(G1, G2, args.degree)
                    out.write(record.to_json() + '\n')

        elif command == 'indunique-count':
            if args.list:
                for graph in independence_unique_graphs(args.n):
                    out.write(to_graph6(graph) + '\n')
            else:
                out.write('%i\n' % independence_unique_count(args.n))

        elif command == 'census':
            pattern = from_graph6(args.pattern)
            for g6, count in search.census(pattern,
                                           read_graph6_file(args.infile)):
                out.write('%s\t%i\n' % (g6, count))

        elif command == 'construct':
            out.write(to_graph6(_construct(args)) + '\n')

        elif command in ('find-os', 'find-acsz'):
            max_n = args.max_n
            if max_n is None:
                max_n = int(kromatic.config.search.instanceMaxN)
            if command == 'find-os':
                instances = constructions.find_os_instances(max_n)
            else:
                instances = constructions.find_acsz_instances(max_n)
            for inst in instances:
                out.write(json.dumps(inst.to_record(), sort_keys=True) + '\n')

        else:  # pragma: no cover - argparse rejects unknown commands
            raise InputError('Unknown command %r' % command)

    return 0


def _construct(args):
    G = from_graph6(args.g)
    H = from_graph6(args.h) if args.h else complete_graph(1)
    if args.op == 'union':
        return disjoint_union(G, H)
    elif args.op == 'join':
        return join(G, H)
    elif args.op == 'attach-except':
        return constructions.attach_except(G, args.v, H)
    elif args.op == 'attach-vertex':
        return constructions.attach_to_vertex(G, args.v, H)
    else:
        return constructions.split_graph(G)


def main(argv=None, stdout=None, stderr=None):
    """ main(argv=None, stdout=None, stderr=None)
    Parse the arguments, run the command and return the exit status.
    """
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code else 0
    if args.quiet:
        kromaticLogging.setVerbose(0)
    try:
        return handle_command(args, stdout)
    except (KromaticError, OSError) as err:
        stderr.write('error: %s\n' % err)
        return 2
