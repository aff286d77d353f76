# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module paths

Get paths to the per-user directories kromatic writes to, in a cross
platform manner. Nothing is created here; callers use ensure_dir() when
they first write.

"""

import os
import sys


def appdata_dir(appname=None, roaming=False):
    """ appdata_dir(appname=None, roaming=False)
    Get the path to the directory where user specific files such as the
    config are stored. The KROMATIC_APPDATA environment variable overrides
    the platform default. If appname is given, a subdir is appended; in the
    home directory that subdir is hidden.
    """
    override = os.getenv('KROMATIC_APPDATA')
    if override:
        return os.path.abspath(os.path.expanduser(override))

    userDir = os.path.expanduser('~')
    path = None
    if sys.platform.startswith('win'):
        path1, path2 = os.getenv('LOCALAPPDATA'), os.getenv('APPDATA')
        path = (path2 or path1) if roaming else (path1 or path2)
    elif sys.platform.startswith('darwin'):
        path = os.path.join(userDir, 'Library', 'Application Support')
    if not (path and os.path.isdir(path)):
        path = userDir

    if appname:
        if path == userDir:
            appname = '.' + appname.lstrip('.')  # hidden
        path = os.path.join(path, appname)
    return path


def cache_dir(appname=None):
    """ cache_dir(appname=None)
    Get the path to the directory for fingerprint caches and instance
    registries: the KROMATIC_CACHE_DIR environment variable if set, else
    a "cache" subdir of the app data directory.
    """
    override = os.getenv('KROMATIC_CACHE_DIR')
    if override:
        return os.path.abspath(os.path.expanduser(override))
    return os.path.join(appdata_dir(appname), 'cache')


def ensure_dir(path):
    """ ensure_dir(path)
    Create the directory (and its parents) if needed. Returns the path.
    """
    if not os.path.isdir(path):
        os.makedirs(path)
    return path
