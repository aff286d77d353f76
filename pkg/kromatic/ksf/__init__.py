# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Package kromatic.ksf

Independence polynomials and fingerprints, partitions, truncated
symmetric series, stable set covers, and the constructions that produce
graphs with equal Kromatic or chromatic symmetric function.

"""
