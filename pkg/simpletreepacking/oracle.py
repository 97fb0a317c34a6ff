#!/usr/bin/env python
# -*- coding: utf-8 -*-


'''
Brute-force ground truth for the packer.

Nothing in here shares code with the algorithm beyond the Partition
value type and the MultiGraph container: connectivity and tree checks
go through networkx, and the partition condition is decided by trying
every partition of the vertex set.  That keeps it usable as an
independent referee for small graphs only (the Bell numbers grow fast,
Bell(12) is 4213597).
'''


import itertools
import networkx as nx
try:
    ModuleNotFoundError
except:
    ModuleNotFoundError = ImportError

try:
    from .miscfuncs import isitint, checkedgeids, GraphInputError, \
                           InvalidPartition, INFINITY
    from .partition import Partition
except Exception as e:
    if type(e) != ImportError and \
       type(e) != ModuleNotFoundError and \
       type(e) != ValueError and \
       type(e) != SystemError:
        raise Exception("Unknown problem with imports.")
    from miscfuncs import isitint, checkedgeids, GraphInputError, \
                          InvalidPartition, INFINITY
    from partition import Partition


MAX_ORACLE_VERTICES = 12


class DensityReport(object):
    '''
    margin is the minimum over all partitions P of
    |E(G/P)| - k(|P|-1); witness is the first partition (in enumeration
    order) reaching it.  A negative margin makes witness a certificate.
    '''

    def __init__(self, margin, witness):
        self.margin = margin
        self.witness = witness

    def __repr__(self):
        return 'DensityReport(margin=%d, witness=%r)' % (self.margin, self.witness)


def _nxgraph(g, edges):
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    for e in edges:
        h.add_edge(g.edges[e][0], g.edges[e][1], key=e)
    return h


def enumerate_partitions(n):
    '''
    Every partition of {0..n-1} exactly once, walking restricted growth
    strings in lexicographic order: the trivial partition comes first
    and the singletons last.

    >>> [p.tolist() for p in enumerate_partitions(3)]
    [[[0, 1, 2]], [[0, 1], [2]], [[0, 2], [1]], [[0], [1, 2]], [[0], [1], [2]]]
    '''

    if not isitint(n) or n < 1 or n > MAX_ORACLE_VERTICES:
        raise GraphInputError('Partition enumeration supports 1 <= n <= %d, got %r.' % (MAX_ORACLE_VERTICES, n))
    rgs = [0] * n
    # top[i] = max(rgs[:i])
    top = [0] * n
    while True:
        yield Partition.fromlabels(rgs)
        i = n - 1
        while i > 0 and rgs[i] > top[i]:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for x in range(i + 1, n):
            rgs[x] = 0
            top[x] = max(top[x - 1], rgs[x - 1])


def density_margin(g, k):
    '''
    >>> from simpletreepacking.multigraph import MultiGraph
    >>> density_margin(MultiGraph(3, [(0, 1), (1, 2)]), 2)
    DensityReport(margin=-2, witness=Partition([[0], [1], [2]]))
    '''

    if not isitint(k) or k < 0:
        raise GraphInputError('k must be a non-negative integer, got %r.' % (k,))
    best = None
    for p in enumerate_partitions(g.n):
        c = p.classof
        crossing = sum(1 for u, v in g.edges if c[u] != c[v])
        margin = crossing - k * (len(p) - 1)
        if best is None or margin < best.margin:
            best = DensityReport(margin, p)
    return best


def verify_packing(g, trees, k):
    '''
    (True, '') if trees are k pairwise disjoint spanning trees of g,
    otherwise (False, a description of the first problem found).
    '''

    trees = list(trees)
    if len(trees) != k:
        return False, 'Expected %d trees, got %d.' % (k, len(trees))
    seen = {}
    for i, tree in enumerate(trees):
        tree = list(tree)
        for e in tree:
            if not isitint(e) or e < 0 or e >= g.m:
                return False, 'Tree %d: edge id %r out of range.' % (i + 1, e)
            if e in seen:
                if seen[e] == i:
                    return False, 'Tree %d: edge %d listed twice.' % (i + 1, e)
                return False, 'Trees %d and %d share edge %d.' % (seen[e] + 1, i + 1, e)
            seen[e] = i
            if g.edges[e][0] == g.edges[e][1]:
                return False, 'Tree %d: edge %d is a loop.' % (i + 1, e)
        if len(tree) != g.n - 1:
            return False, 'Tree %d has %d edges, a spanning tree needs %d.' % (i + 1, len(tree), g.n - 1)
        if not nx.is_tree(_nxgraph(g, tree)):
            return False, 'Tree %d is not a spanning tree.' % (i + 1)
    return True, ''


def verify_certificate(g, p, k):
    '''
    (True, '') if G/p has fewer than k(|p|-1) edges, otherwise (False,
    the counts).
    '''

    if not isinstance(p, Partition) or p.n != g.n:
        raise InvalidPartition('Certificate does not partition the %d vertices of the graph.' % g.n)
    c = p.classof
    crossing = sum(1 for u, v in g.edges if c[u] != c[v])
    bound = k * (len(p) - 1)
    if crossing < bound:
        return True, ''
    return False, '%d edges cross the %d classes, not fewer than %d.' % (crossing, len(p), bound)


def brute_force_packable(g, k):
    '''
    Decides packability by trying every assignment of the edges to k
    trees or to no tree.  Only for tiny graphs: n <= 4, m <= 8, k <= 2.
    '''

    if g.n > 4 or g.m > 8 or not isitint(k) or k < 0 or k > 2:
        raise GraphInputError('Exhaustive packing search needs n <= 4, m <= 8, 0 <= k <= 2.')
    if k == 0:
        return True
    for coloring in itertools.product(range(k + 1), repeat=g.m):
        trees = [[e for e in range(g.m) if coloring[e] == c] for c in range(1, k + 1)]
        if all(len(tree) == g.n - 1 for tree in trees) and verify_packing(g, trees, k)[0]:
            return True
    return False


def cycle_edges_by_removal(g, edgeset):
    '''
    The edges of edgeset whose ends stay connected when the edge itself
    is removed (loops always qualify).  Quadratic, for cross-checking.
    '''

    edgeset = checkedgeids(edgeset, g.m)
    out = set()
    for e in edgeset:
        u, v = g.edges[e]
        if u == v or nx.has_path(_nxgraph(g, edgeset - set([e])), u, v):
            out.add(e)
    return frozenset(out)


def sequence_by_definition(g, t):
    '''
    The associated partition sequence computed straight from the
    definition with networkx induced subgraphs.  Returns (steps,
    terminal) with steps a list of (Partition, splitter).
    '''

    current = [set(range(g.n))]
    steps = []
    while True:
        for c in range(1, t.k + 1):
            color = _nxgraph(g, t.colorclass(c))
            pieces = []
            for x in current:
                pieces.extend(nx.connected_components(color.subgraph(x)))
            if len(pieces) > len(current):
                steps.append((Partition(current, g.n), c))
                current = [set(piece) for piece in pieces]
                break
        else:
            return steps, Partition(current, g.n)


def levels_by_definition(g, t):
    '''
    Level of each edge as the largest i with both ends in one class of
    P_i, found by scanning the whole sequence.
    '''

    steps, terminal = sequence_by_definition(g, t)
    levels = []
    for u, v in g.edges:
        if terminal.sameclass(u, v):
            levels.append(INFINITY)
            continue
        levels.append(max(i for i, (p, _) in enumerate(steps) if p.sameclass(u, v)))
    return levels
