# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

"""
Kromatic is an exact computational engine for the Kromatic symmetric
function (KSF) of vertex-weighted graphs, the K-theoretic analogue of
Stanley's chromatic symmetric function.

**What it computes**

* KSF *fingerprints*: the multiset of independence polynomials of all
  induced subgraphs, which determines the KSF exactly.
* Truncated expansions of the KSF in the monomial, augmented monomial and
  K-augmented monomial bases, through stable set covers.
* Isomorphism-free enumeration of all graphs on up to 9 vertices, and an
  exhaustive search for nonisomorphic graphs with equal KSF.
* Builders and checkers for constructions that produce graphs with equal
  KSF or equal chromatic symmetric function, and the criteria that tell
  them apart.

**Subpackages**

* kromatic.graphs - graphs, canonical forms, graph6, generation.
* kromatic.ksf - independence polynomials, symmetric series, covers and
  constructions.
* kromatic.core - the search pipeline, verification suites and the
  command line.

"""

# Set version number
__version__ = '1.0.0'

import os
import sys

# Check Python version
if sys.version_info < (3, 8):
    raise RuntimeError('Kromatic requires Python 3.8 or newer.')

from kromatic.util import zon as ssdf  # zon is ssdf-light
from kromatic.util import paths


## Define some functions

def getResourceDirs():
    """ getResourceDirs()
    Get the directories to the resources: (kromaticDir, appDataDir,
    cacheDir). None of them is created here.
    """
    kromaticDir = os.path.abspath(os.path.dirname(__file__))
    appDataDir = paths.appdata_dir('kromatic')
    cacheDir = paths.cache_dir('kromatic')
    return kromaticDir, appDataDir, cacheDir


def resetConfig():
    """ resetConfig()
    Replace the user config file with the defaults and reload.
    """
    fname = os.path.join(kromaticDir, 'resources', 'defaultConfig.ssdf')
    paths.ensure_dir(appDataDir)
    ssdf.save(os.path.join(appDataDir, 'config.ssdf'), ssdf.load(fname))
    loadConfig()


def loadConfig(defaultsOnly=False):
    """ loadConfig(defaultsOnly=False)
    Load the default configuration file and that of the user (if it
    exists). Any missing fields in the user config are set to the
    defaults.
    """

    # Function to insert names from one config in another
    def replaceFields(base, new):
        for key in new:
            if key in base and isinstance(base[key], dict) \
                    and isinstance(new[key], dict):
                replaceFields(base[key], new[key])
            else:
                base[key] = new[key]

    # Reset our kromatic.config structure
    config.clear()

    # Load default and inject in the kromatic.config
    fname = os.path.join(kromaticDir, 'resources', 'defaultConfig.ssdf')
    replaceFields(config, ssdf.load(fname))

    # Load user config and inject in kromatic.config
    fname = os.path.join(appDataDir, 'config.ssdf')
    if not defaultsOnly and os.path.isfile(fname):
        replaceFields(config, ssdf.load(fname))


def saveConfig():
    """ saveConfig()
    Save the current configuration to the user config file.
    """
    paths.ensure_dir(appDataDir)
    ssdf.save(os.path.join(appDataDir, 'config.ssdf'), config)


def defaultDegree(n):
    """ defaultDegree(n)
    The truncation bound used for n-vertex graphs when none is given.
    """
    return n + int(config.settings.degreeOffset)


## Init

kromaticDir, appDataDir, cacheDir = getResourceDirs()

config = ssdf.new()
loadConfig()
