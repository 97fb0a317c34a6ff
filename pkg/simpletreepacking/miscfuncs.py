#!/usr/bin/env python
# -*- coding: utf-8 -*-


'''
A set of miscellaneous helpers shared by every other module: type
checks that behave the same in Python 2 and 3, the level sentinel,
and the exceptions the package raises.

Everything that can go wrong with the caller's input is a
GraphInputError (a ValueError, so old code catching ValueError keeps
working). InternalInvariantError is reserved for the things that
cannot happen if the algorithm is right, like the exchange step
failing to find an edge that the counting argument says must exist.
'''


import sys


# Level of an edge whose ends never separate.  Compares above every int.
INFINITY = float('inf')


class GraphInputError(ValueError):
    pass


class InvalidPartition(GraphInputError):
    pass


class NoCycleError(GraphInputError):
    pass


class GraphFormatError(GraphInputError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = 'Line %d: %s' % (lineno, message)
        super(GraphFormatError, self).__init__(message)
        self.lineno = lineno


class UnboundedPackingError(GraphInputError):
    pass


class InternalInvariantError(Exception):
    pass


class TraceMismatchError(Exception):
    pass


def isitstring(i):
    if sys.version_info[0] == 2:
        return isinstance(i, basestring)
    return isinstance(i, str)


def isitint(i):
    '''
    True for ints (and Python 2 longs), False for everything else,
    including bools, which would otherwise sneak through as 0 and 1.

    >>> isitint(3), isitint(True), isitint(3.0)
    (True, False, False)
    '''

    if isinstance(i, bool):
        return False
    if sys.version_info[0] == 2:
        return isinstance(i, (int, long))
    return isinstance(i, int)


def checkedgeids(edgeset, m):
    '''
    Returns the edge ids as a frozenset, raising GraphInputError for
    anything that is not an id of a graph with m edges.
    '''

    out = frozenset(edgeset)
    for e in out:
        if not isitint(e) or e < 0 or e >= m:
            raise GraphInputError('Edge id %r out of range for %d edges.' % (e, m))
    return out


def levelstr(level):
    if level == INFINITY:
        return 'inf'
    return str(level)
