# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Package kromatic.util

Stand-alone helpers without kromatic dependencies: the ZON config file
format and the platform directories.

"""
