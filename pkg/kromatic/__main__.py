#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Kromatic __main__ module

This module enables starting Kromatic via either "python3 -m kromatic" or
"python3 path/to/kromatic".

In the first case it simply imports kromatic. In the latter case, that
import will generally fail, in which case the parent directory is added to
sys.path and the import is tried again.

"""

import os
import sys

try:
    import kromatic
except ImportError:
    # Very probably run as a script, either the package or the __main__
    # directly. Add parent directory to sys.path and try again.
    thisDir = os.path.abspath(os.path.dirname(__file__))
    sys.path.insert(0, os.path.split(thisDir)[0])
    try:
        import kromatic  # noqa
    except ImportError:
        raise ImportError('Could not import Kromatic in either way.')

from kromatic.core.commandline import main as _main


def main():
    sys.exit(_main())


if __name__ == '__main__':
    main()
