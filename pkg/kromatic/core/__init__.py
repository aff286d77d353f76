# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Package kromatic.core

The collision search, the verification suites, the task objects that run
them, logging and the command line.

"""
