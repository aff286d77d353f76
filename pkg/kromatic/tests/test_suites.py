# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Tests for kromatic.core.suites, on small graphs. The full-scale runs
are in test_acceptance.
"""

import unittest

from kromatic.misc import InputError
from kromatic.core.suites import SUITES, SuiteResult, run_suite


class TestSuiteResult(unittest.TestCase):

    def test_result(self):
        result = SuiteResult('demo')
        self.assertTrue(result.check(True, 'fine'))
        self.assertTrue(result.passed)
        self.assertFalse(result.check(False, 'broken'))
        self.assertFalse(result.passed)
        self.assertEqual(result.failures, ['broken'])
        self.assertEqual(result.summary(),
                         'suite demo: 2 checks, 1 failures, FAILED')


class TestSuites(unittest.TestCase):

    def run_and_check(self, name, max_n, min_checks=1):
        result = run_suite(name, max_n)
        self.assertEqual(result.name, name)
        self.assertEqual(result.failures, [])
        self.assertGreaterEqual(result.checked, min_checks)
        self.assertTrue(result.summary().endswith('passed'))

    def test_names(self):
        self.assertEqual(sorted(SUITES),
                         ['amplify', 'attach', 'clan', 'consistency',
                          'f-identity', 'join', 'os', 'split', 'union'])
        self.assertRaises(InputError, run_suite, 'nope')

    def test_f_identity(self):
        self.run_and_check('f-identity', 4)

    def test_join_and_union(self):
        self.run_and_check('join', 4)
        self.run_and_check('union', 4)

    def test_clan(self):
        self.run_and_check('clan', 3)

    def test_consistency(self):
        self.run_and_check('consistency', 5)
        # one class check and two distinctness checks per n
        self.assertEqual(run_suite('consistency', 4).checked, 12)

    def test_attach(self):
        self.run_and_check('attach', 3)

    def test_amplify_without_pairs(self):
        # no equal KSF pairs exist on 5 vertices
        self.run_and_check('amplify', 5, min_checks=0)

    def test_os(self):
        self.run_and_check('os', 5)

    def test_split(self):
        self.run_and_check('split', 5, min_checks=0)


if __name__ == '__main__':
    unittest.main()
