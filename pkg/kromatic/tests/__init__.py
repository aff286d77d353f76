# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Unit tests for kromatic.

Run with "python -m unittest discover kromatic/tests" from the repository
root. The expensive checks in test_acceptance only run when the
environment variable KROMATIC_SLOW_TESTS is set to 1.

"""

import kromatic
from kromatic.core import kromaticLogging

# Tests use the default config, whatever the user has in the app data dir
kromatic.loadConfig(defaultsOnly=True)
kromaticLogging.setVerbose(0)
