# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module tasks

Small units of work. A Task wraps a computation with its parameters and
keeps its result or its error; verification suites are tasks. parallel_map
spreads a pure function over worker processes and returns the results in
input order.

"""

import multiprocessing

import kromatic
from kromatic.core.kromaticLogging import print


class Task(object):
    """ Task(**params)

    A task object. Accepts params as keyword arguments.
    When overloading, dont forget to set __slots__.

    Overload and implement the 'process' method to create a task.
    Then call run(). Use the 'result' method to obtain the result (or
    raise the error that occurred).
    """
    __slots__ = ['_params', '_result', '_error']

    def __init__(self, **params):
        if not params:
            params = None
        self._params = params
        self._result = None
        self._error = None

    def __repr__(self):
        params = ', '.join('%s=%r' % kv for kv in sorted((self._params or {})
                                                          .items()))
        return '<%s %s>' % (self.__class__.__name__, params)

    @property
    def params(self):
        return dict(self._params or {})

    def process(self, **params):
        """ process(**params)
        This is the method that represents the task. Overload this to make
        the task do what is intended.
        """
        pass

    def run(self):
        """ run()
        Run the task, capturing any error. Returns self.
        """
        try:
            params = self._params or {}
            self._result = self.process(**params)
        except Exception as err:
            self._error = err
            print('Task failed: {}: {}'.format(self, err))
        return self

    def failed(self):
        return self._error is not None

    def result(self):
        """ result()
        Get the result. Raises the error if the task failed.
        """
        if self._error is not None:
            raise self._error
        else:
            return self._result


def resolve_workers(workers=None):
    """ resolve_workers(workers=None)
    The number of worker processes to use: the given value, else the
    config setting. Never below 1.
    """
    if workers is None:
        workers = kromatic.config.settings.workers
    return max(1, int(workers))


def parallel_map(func, items, workers=None, chunksize=16):
    """ parallel_map(func, items, workers=None, chunksize=16)
    List of func(item) for all items, in input order. With more than one
    worker the items are sharded over a process pool; func must then be a
    module-level function.
    """
    workers = resolve_workers(workers)
    items = list(items)
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(func, items, chunksize)
