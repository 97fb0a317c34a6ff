#!/usr/bin/env python
# -*- coding: utf-8 -*-


'''
k-partitions of the edge set, the partition sequence associated with
one, edge levels, and the improvement order between k-partitions.

A KPartition gives every edge a color 1..k; color c is the spanning
subgraph T_c.  Its sequence starts at the trivial partition and keeps
splitting: at each step the splitter is the least color that is
disconnected inside some current class, and the next partition is made
of the components of that color inside each class.  When every color
is connected on every class the sequence stops at its terminal
partition, and from there on the splitter reads k+1.

The level of an edge is the last index at which both of its ends are
still in one class (infinity if they never separate).
'''


try:
    ModuleNotFoundError
except:
    ModuleNotFoundError = ImportError

try:
    from .miscfuncs import isitint, GraphInputError, INFINITY
    from .partition import Partition, strictly_refines
    from .multigraph import restrict_components
except Exception as e:
    if type(e) != ImportError and \
       type(e) != ModuleNotFoundError and \
       type(e) != ValueError and \
       type(e) != SystemError:
        raise Exception("Unknown problem with imports.")
    from miscfuncs import isitint, GraphInputError, INFINITY
    from partition import Partition, strictly_refines
    from multigraph import restrict_components


class KPartition(object):
    '''
    Assignment of every edge id to a color in 1..k.

    >>> t = KPartition(2, [1, 2, 2, 1])
    >>> sorted(t.colorclass(2))
    [1, 2]
    >>> t2 = t.recolor({0: 2, 1: 1})
    >>> t2.colorof
    (2, 1, 2, 1)
    >>> t.colorof
    (1, 2, 2, 1)
    '''

    def __init__(self, k, colorof):
        if not isitint(k) or k < 1:
            raise GraphInputError('A k-partition needs k >= 1, got %r.' % (k,))
        colorof = tuple(colorof)
        classes = [[] for _ in range(k)]
        for e, c in enumerate(colorof):
            if not isitint(c) or c < 1 or c > k:
                raise GraphInputError('Edge %d has color %r outside 1..%d.' % (e, c, k))
            classes[c - 1].append(e)
        self.k = k
        self.colorof = colorof
        self._classes = tuple(frozenset(c) for c in classes)

    @classmethod
    def fromclasses(cls, g, classes):
        '''
        classes[i] is the edge set of color i+1; together they must
        cover every edge of g exactly once.
        '''

        colorof = [None] * g.m
        for i, edges in enumerate(classes):
            for e in edges:
                if not isitint(e) or e < 0 or e >= g.m:
                    raise GraphInputError('Edge id %r out of range for %d edges.' % (e, g.m))
                if colorof[e] is not None:
                    raise GraphInputError('Edge %d is in two color classes.' % e)
                colorof[e] = i + 1
        if None in colorof:
            raise GraphInputError('Edge %d has no color.' % colorof.index(None))
        return cls(len(classes), colorof)

    def colorclass(self, c):
        return self._classes[c - 1]

    def recolor(self, changes):
        colorof = list(self.colorof)
        for e, c in changes.items():
            colorof[e] = c
        return KPartition(self.k, colorof)

    def __eq__(self, other):
        if not isinstance(other, KPartition):
            return NotImplemented
        return self.k == other.k and self.colorof == other.colorof

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash((self.k, self.colorof))

    def __repr__(self):
        return 'KPartition(%d, %r)' % (self.k, list(self.colorof))


class PartitionSequence(object):
    '''
    The strict-refinement steps (P_i, c_i) plus the terminal partition.
    Indexing past the last step gives the terminal partition and the
    k+1 splitter, matching the constant tail of the definition.
    '''

    def __init__(self, steps, terminal, k):
        self.steps = tuple(steps)
        self.terminal = terminal
        self.k = k
        self.terminalsplitter = k + 1

    def __len__(self):
        return len(self.steps)

    def partition(self, i):
        if i < len(self.steps):
            return self.steps[i][0]
        return self.terminal

    def splitter(self, i):
        if i < len(self.steps):
            return self.steps[i][1]
        return self.terminalsplitter

    def splitters(self):
        return [c for _, c in self.steps]

    def __eq__(self, other):
        if not isinstance(other, PartitionSequence):
            return NotImplemented
        return (self.k, self.steps, self.terminal) == (other.k, other.steps, other.terminal)

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __repr__(self):
        return 'PartitionSequence(%r, %r, %d)' % (list(self.steps), self.terminal, self.k)


def _checkk(g, t):
    if len(t.colorof) != g.m:
        raise GraphInputError('k-partition colors %d edges but the graph has %d.' % (len(t.colorof), g.m))


def build_sequence(g, t):
    '''
    >>> from simpletreepacking.multigraph import MultiGraph
    >>> g = MultiGraph(4, [(0, 1), (2, 3)])
    >>> seq = build_sequence(g, KPartition(1, [1, 1]))
    >>> seq.splitters(), seq.terminal.tolist()
    ([1], [[0, 1], [2, 3]])
    '''

    _checkk(g, t)
    p = Partition.trivial(g.n)
    steps = []
    while True:
        for c in range(1, t.k + 1):
            q = restrict_components(g, t.colorclass(c), p)
            if q != p:
                steps.append((p, c))
                p = q
                break
        else:
            return PartitionSequence(steps, p, t.k)


def edge_levels(g, t, seq=None):
    '''
    Level of every edge, as a tuple indexed by edge id.  An edge that
    first separates at P_{i+1} has level i; loops and edges inside a
    terminal class have level INFINITY.
    '''

    _checkk(g, t)
    if seq is None:
        seq = build_sequence(g, t)
    levels = [INFINITY] * g.m
    pending = [e for e in range(g.m) if not g.isloop(e)]
    for i in range(1, len(seq) + 1):
        p = seq.partition(i)
        still = []
        for e in pending:
            u, v = g.edges[e]
            if p.classof[u] != p.classof[v]:
                levels[e] = i - 1
            else:
                still.append(e)
        pending = still
    return tuple(levels)


def divergence_index(sa, sb):
    '''
    First index i where (P_i, c_i) of the two sequences differ, reading
    both past their ends by the terminal convention.  None if they are
    the same sequence.
    '''

    for i in range(max(len(sa), len(sb)) + 1):
        if sa.partition(i) != sb.partition(i) or sa.splitter(i) != sb.splitter(i):
            return i
    return None


def precedes(ta, tb, g):
    '''
    True iff ta comes strictly before tb in the improvement order: at
    the first index j where the sequences differ, ta's partition
    strictly refines tb's, or the partitions agree and ta's splitter is
    smaller.  Incomparable pairs give False.
    '''

    if ta.k != tb.k:
        raise GraphInputError('Cannot compare a %d-partition with a %d-partition.' % (ta.k, tb.k))
    _checkk(g, ta)
    _checkk(g, tb)
    sa, sb = build_sequence(g, ta), build_sequence(g, tb)
    j = divergence_index(sa, sb)
    if j is None:
        return False
    pa, pb = sa.partition(j), sb.partition(j)
    if strictly_refines(pa, pb):
        return True
    return pa == pb and sa.splitter(j) < sb.splitter(j)
