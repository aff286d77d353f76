# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module kromatic.misc

Defines the exception classes used throughout kromatic, and a few small
bit-twiddling helpers shared by the graph and algebra modules.

"""

import sys


## Exceptions

class KromaticError(Exception):
    """ Base class for all errors raised deliberately by kromatic.
    """
    pass

class InputError(KromaticError, ValueError):
    """ An argument is out of range or otherwise malformed: a vertex that
    does not exist, a self-loop, a basis mismatch, series with different
    degree bounds, graphs with different vertex counts.
    """
    pass

class CapacityError(KromaticError, ValueError):
    """ A size is beyond one of the configured bounds (vertex capacity,
    generation bound, fingerprint bound, automorphism bound).
    """
    pass

class PreconditionError(KromaticError, ValueError):
    """ A construction was asked for an instance that does not pass its
    checker.
    """
    pass

class TruncationError(KromaticError, ArithmeticError):
    """ A change of basis would need terms above the available degree bound.
    """
    pass

class CacheError(KromaticError, IOError):
    """ A cache or registry file holds a line that cannot be parsed.
    """
    def __init__(self, filename, linenr, reason):
        msg = '%s, line %i: %s' % (filename, linenr, reason)
        KromaticError.__init__(self, msg)
        self.filename = filename
        self.linenr = linenr


## Bit helpers

if sys.version_info >= (3, 10):
    def popcount(x):
        """ popcount(x)
        Number of set bits in the nonnegative integer x.
        """
        return x.bit_count()
else:  # pragma: no cover
    def popcount(x):
        return bin(x).count('1')


def iter_bits(mask):
    """ iter_bits(mask)
    Yield the indices of the set bits of mask, lowest first.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    """ mask_of(vertices)
    Turn an iterable of vertex indices into a bit mask.
    """
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask
