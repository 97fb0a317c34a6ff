#!/usr/bin/env python
# -*- coding: utf-8 -*-


'''
DIMACS-style graph files, and reproducible random multigraphs.

    c any comment
    p <n> <m>
    e <u> <v>      (m of these, 1-based vertices, u = v allowed)

Blank lines and lines starting with 'c' are ignored anywhere.  Edge
ids are the 0-based order of the 'e' lines.

Random graphs come from SplitMix64 so that a given (n, m, seed) gives
the same file on any machine and in any language that implements the
same generator.
'''


try:
    ModuleNotFoundError
except:
    ModuleNotFoundError = ImportError

try:
    from .miscfuncs import isitint, isitstring, GraphFormatError, GraphInputError
    from .multigraph import MultiGraph
except Exception as e:
    if type(e) != ImportError and \
       type(e) != ModuleNotFoundError and \
       type(e) != ValueError and \
       type(e) != SystemError:
        raise Exception("Unknown problem with imports.")
    from miscfuncs import isitint, isitstring, GraphFormatError, GraphInputError
    from multigraph import MultiGraph


MASK64 = 0xffffffffffffffff
SPLITMIX_GAMMA = 0x9e3779b97f4a7c15
SPLITMIX_MIX1 = 0xbf58476d1ce4e5b9
SPLITMIX_MIX2 = 0x94d049bb133111eb


class SplitMix64(object):
    '''
    Steele, Lea and Flood's SplitMix64, the usual seeder for the
    xorshift family.

    >>> r = SplitMix64(0)
    >>> hex(r.next()).rstrip('L')
    '0xe220a8397b1dcdaf'
    '''

    def __init__(self, seed):
        if not isitint(seed):
            raise GraphInputError('Seed must be an integer, got %r.' % (seed,))
        self.state = seed & MASK64

    def next(self):
        self.state = (self.state + SPLITMIX_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * SPLITMIX_MIX1) & MASK64
        z = ((z ^ (z >> 27)) * SPLITMIX_MIX2) & MASK64
        return z ^ (z >> 31)

    __next__ = next

    def below(self, n):
        return self.next() % n


def random_graph(n, m, seed):
    '''
    m edges with both ends drawn uniformly (u first, then v), so loops
    and parallel edges happen.
    '''

    if not isitint(n) or n < 1:
        raise GraphInputError('Vertex count must be a positive integer, got %r.' % (n,))
    if not isitint(m) or m < 0:
        raise GraphInputError('Edge count must be a non-negative integer, got %r.' % (m,))
    r = SplitMix64(seed)
    edges = []
    for _ in range(m):
        u = r.below(n)
        v = r.below(n)
        edges.append((u, v))
    return MultiGraph(n, edges)


def _int(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError('%s %r is not an integer.' % (what, token), lineno)


def parse_graph(source):
    '''
    Reads a graph from a string or an iterable of lines (an open file
    works).

    >>> g = parse_graph('p 3 3\\ne 1 2\\ne 1 3\\ne 2 3\\n')
    >>> g.edges
    ((0, 1), (0, 2), (1, 2))
    >>> try:
    ...     parse_graph('p 2 2\\ne 1 2\\ne 1 3\\n')
    ... except GraphFormatError as e:
    ...     print(e)
    Line 3: Vertex 3 out of range 1..2.
    '''

    if isitstring(source):
        source = source.splitlines()
    n = m = None
    headerline = 0
    edges = []
    lineno = 0
    for lineno, line in enumerate(source, 1):
        tokens = line.split()
        if not tokens or tokens[0].startswith('c'):
            continue
        if tokens[0] == 'p':
            if n is not None:
                raise GraphFormatError('Second header line (first was line %d).' % headerline, lineno)
            if len(tokens) != 3:
                raise GraphFormatError("Header must read 'p <n> <m>'.", lineno)
            n = _int(tokens[1], lineno, 'Vertex count')
            m = _int(tokens[2], lineno, 'Edge count')
            if n < 1 or m < 0:
                raise GraphFormatError('Header needs n >= 1 and m >= 0.', lineno)
            headerline = lineno
        elif tokens[0] == 'e':
            if n is None:
                raise GraphFormatError('Edge line before the header.', lineno)
            if len(tokens) != 3:
                raise GraphFormatError("Edge line must read 'e <u> <v>'.", lineno)
            if len(edges) == m:
                raise GraphFormatError('More than the %d edges announced on line %d.' % (m, headerline), lineno)
            ends = []
            for token in tokens[1:]:
                x = _int(token, lineno, 'Vertex')
                if x < 1 or x > n:
                    raise GraphFormatError('Vertex %d out of range 1..%d.' % (x, n), lineno)
                ends.append(x - 1)
            edges.append(tuple(ends))
        else:
            raise GraphFormatError('Unknown line type %r.' % tokens[0], lineno)
    if n is None:
        raise GraphFormatError('No header line.', lineno)
    if len(edges) != m:
        raise GraphFormatError('Header announced %d edges, found %d.' % (m, len(edges)), lineno)
    return MultiGraph(n, edges)


def serialize_graph(g, comments=()):
    lines = ['c %s' % c for c in comments]
    lines.append('p %d %d' % (g.n, g.m))
    for u, v in g.edges:
        lines.append('e %d %d' % (u + 1, v + 1))
    return '\n'.join(lines) + '\n'
