# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Tests for the zon config format, the config layer and the paths.
"""

import os
import tempfile
import unittest
from unittest import mock

import kromatic
from kromatic.util import zon, paths
from kromatic.core import kromaticLogging


ZON_TEXT = """
# -*- coding: utf-8 -*-
settings = dict:
  degreeOffset = 3
  name = 'it\\'s'
  bounds = [1, 2.5, 'x']
  nested = dict:
    flag = None
empty = list:
"""


class TestZon(unittest.TestCase):

    def test_loads(self):
        d = zon.loads(ZON_TEXT)
        self.assertEqual(d.settings.degreeOffset, 3)
        self.assertEqual(d.settings.name, "it's")
        self.assertEqual(d.settings.bounds, [1, 2.5, 'x'])
        self.assertIsNone(d.settings.nested.flag)
        self.assertEqual(d.empty, [])
        self.assertRaises(AttributeError, getattr, d, 'missing')

    def test_round_trip(self):
        d = zon.loads(ZON_TEXT)
        self.assertEqual(zon.loads(zon.saves(d)), d)
        with tempfile.TemporaryDirectory() as dirname:
            filename = os.path.join(dirname, 'c.ssdf')
            zon.save(filename, d)
            self.assertEqual(zon.load(filename), d)

    def test_errors(self):
        self.assertRaises(ValueError, zon.loads, 'a = dict:\n  b = 1\n c = 2\n')
        self.assertRaises(ValueError, zon.loads, 'a = \n')
        self.assertRaises(ValueError, zon.loads, "a = 'open\n")
        self.assertRaises(ValueError, zon.loads, 'a = [1, 2\n')
        self.assertRaises(ValueError, zon.saves, {'not a name': 1})
        self.assertRaises(ValueError, zon.saves, [])

    def test_dict(self):
        d = zon.new()
        d.x = 1
        self.assertEqual(d['x'], 1)
        self.assertRaises(AttributeError, setattr, d, 'keys', 2)
        c = zon.copy({'a': (1, {'b': 2})})
        self.assertEqual(c.a[1].b, 2)


class TestConfig(unittest.TestCase):

    def tearDown(self):
        kromatic.loadConfig(defaultsOnly=True)

    def test_defaults(self):
        settings = kromatic.config.settings
        self.assertEqual(settings.degreeOffset, 2)
        self.assertEqual(settings.maxGenerateN, 9)
        self.assertEqual(settings.maxFingerprintN, 12)
        self.assertEqual(kromatic.config.search.maxEdgeDeletions, 2)
        self.assertEqual(kromatic.defaultDegree(6), 8)

    def test_user_config(self):
        with tempfile.TemporaryDirectory() as dirname:
            with mock.patch.object(kromatic, 'appDataDir', dirname):
                with open(os.path.join(dirname, 'config.ssdf'), 'w') as f:
                    f.write('settings = dict:\n  degreeOffset = 4\n')
                kromatic.loadConfig()
                self.assertEqual(kromatic.defaultDegree(6), 10)
                # fields missing from the user file keep their defaults
                self.assertEqual(kromatic.config.settings.maxGenerateN, 9)
                kromatic.saveConfig()
                saved = zon.load(os.path.join(dirname, 'config.ssdf'))
                self.assertEqual(saved.search.instanceMaxN, 6)
                kromatic.loadConfig(defaultsOnly=True)
                self.assertEqual(kromatic.defaultDegree(6), 8)

    def test_paths(self):
        with tempfile.TemporaryDirectory() as dirname:
            env = {'KROMATIC_CACHE_DIR': dirname, 'KROMATIC_APPDATA': dirname}
            with mock.patch.dict(os.environ, env):
                self.assertEqual(paths.cache_dir('kromatic'), dirname)
                self.assertEqual(paths.appdata_dir('kromatic'), dirname)
            sub = os.path.join(dirname, 'a', 'b')
            self.assertEqual(paths.ensure_dir(sub), sub)
            self.assertTrue(os.path.isdir(sub))


class TestLogging(unittest.TestCase):

    def tearDown(self):
        kromaticLogging.setVerbose(0)

    def test_verbose(self):
        kromaticLogging.setVerbose(0)
        self.assertFalse(kromaticLogging.isVerbose())
        kromaticLogging.setVerbose(None)
        self.assertEqual(kromaticLogging.isVerbose(),
                         bool(kromatic.config.settings.verbose))

    def test_log_lines_go_to_stderr(self):
        kromaticLogging.setVerbose(1)
        with mock.patch('sys.stderr') as stderr:
            with kromaticLogging.LogTimer('Counting') as timer:
                timer.summary = '3 things'
        text = ''.join(call.args[0] for call in stderr.write.call_args_list)
        self.assertIn('Counting ...', text)
        self.assertIn('Counting done: 3 things', text)

    def test_progress_passthrough(self):
        items = [1, 2, 3]
        self.assertIs(kromaticLogging.progress(items), items)


if __name__ == '__main__':
    unittest.main()
