# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module logging

Functionality for logging in kromatic. Log lines carry a timestamp and go
to stderr, so that stdout stays free for graph6 and JSON output.

"""

import sys
import time

import kromatic

_verbose = None  # None means: follow config.settings.verbose


def setVerbose(level):
    """ setVerbose(level)
    Set the verbosity for this process; 0 silences logging. Pass None to
    follow the config again.
    """
    global _verbose
    _verbose = level


def isVerbose():
    if _verbose is not None:
        return bool(_verbose)
    return bool(kromatic.config.settings.verbose)


original_print = print
def print(*args, **kwargs):
    if not isVerbose():
        return
    # Obtain time string
    t = time.localtime()
    preamble = "{:02g}-{:02g}-{:04g} {:02g}:{:02g}:{:02g}: "
    preamble = preamble.format( t.tm_mday, t.tm_mon, t.tm_year,
                                t.tm_hour, t.tm_min, t.tm_sec)
    # Prepend to args and print
    args = [preamble] + list(args)
    kwargs.setdefault('file', sys.stderr)
    original_print(*tuple(args), **kwargs)


class LogTimer(object):
    """ LogTimer(what)
    Context manager that logs a start line, and on exit a line with the
    elapsed time and whatever was put in the ``summary`` attribute.
    """

    __slots__ = ['_what', '_t0', 'summary']

    def __init__(self, what):
        self._what = what
        self._t0 = None
        self.summary = ''

    def __enter__(self):
        self._t0 = time.perf_counter()
        print('%s ...' % self._what)
        return self

    def __exit__(self, type, value, tb):
        elapsed = time.perf_counter() - self._t0
        if type is None:
            extra = (': ' + self.summary) if self.summary else ''
            print('%s done%s (%.2f s)' % (self._what, extra, elapsed))
        else:
            print('%s failed after %.2f s' % (self._what, elapsed))


def progress(iterable, desc=None, total=None):
    """ progress(iterable, desc=None, total=None)
    Wrap iterable in a tqdm progress bar when progress bars are enabled
    and logging is on; otherwise return it unchanged.
    """
    if not (kromatic.config.settings.progressBars and isVerbose()):
        return iterable
    from tqdm import tqdm
    return tqdm(iterable, desc=desc, total=total, file=sys.stderr,
                leave=False)
