#!/usr/bin/env python
# -*- coding: utf-8 -*-


'''
Undirected multigraphs with dense integer ids, and the structural
queries the packing algorithm needs.

Vertices are 0..n-1 and edges are 0..m-1 in construction order.
Parallel edges and loops are allowed.  Edge sets are passed around as
collections of edge ids (never as endpoint pairs, which stop being
unique once parallel edges exist), and every iteration walks ids in
ascending order so the results are reproducible.
'''


from collections import deque
try:
    ModuleNotFoundError
except:
    ModuleNotFoundError = ImportError

try:
    from .miscfuncs import isitint, checkedgeids, GraphInputError, \
                           InvalidPartition, NoCycleError
    from .partition import Partition
except Exception as e:
    if type(e) != ImportError and \
       type(e) != ModuleNotFoundError and \
       type(e) != ValueError and \
       type(e) != SystemError:
        raise Exception("Unknown problem with imports.")
    from miscfuncs import isitint, checkedgeids, GraphInputError, \
                          InvalidPartition, NoCycleError
    from partition import Partition


class MultiGraph(object):
    '''
    Immutable multigraph: n vertices and a tuple of (u, v) edges
    indexed by edge id.

    >>> g = MultiGraph(3, [(0, 1), (1, 2), (1, 2), (2, 2)])
    >>> g.n, g.m
    (3, 4)
    >>> g.isloop(3)
    True
    '''

    def __init__(self, n, edges=()):
        if not isitint(n) or n < 1:
            raise GraphInputError('Vertex count must be a positive integer, got %r.' % (n,))
        edgelist = []
        for i, edge in enumerate(edges):
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise GraphInputError('Edge %d is not a vertex pair.' % i)
            for x in (u, v):
                if not isitint(x) or x < 0 or x >= n:
                    raise GraphInputError('Edge %d endpoint %r out of range for %d vertices.' % (i, x, n))
            edgelist.append((u, v))
        self.n = n
        self.edges = tuple(edgelist)
        self.m = len(self.edges)

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return 'MultiGraph(%d, %r)' % (self.n, list(self.edges))

    def isloop(self, e):
        u, v = self.edges[e]
        return u == v

    def loops(self):
        return [e for e in range(self.m) if self.isloop(e)]


class DisjointSet(object):
    '''
    Union-find over 0..size-1 with path compression and union by rank.

    >>> ds = DisjointSet(3)
    >>> ds.merge(0, 2)
    True
    >>> ds.merge(2, 0)
    False
    >>> ds.find(0) == ds.find(2), ds.find(0) == ds.find(1)
    (True, False)
    '''

    def __init__(self, size):
        assert size >= 0
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def merge(self, x, y):
        '''
        Joins the sets of x and y; returns False if they were already
        the same set.
        '''

        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        self.parent[y] = x
        if self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        return True

    def labels(self):
        return [self.find(x) for x in range(len(self.parent))]


def _checkpartition(g, p):
    if not isinstance(p, Partition) or p.n != g.n:
        raise InvalidPartition('Partition does not cover the %d vertices of the graph.' % g.n)


def crossing_edges(g, p):
    '''
    Ids of the edges whose ends lie in distinct classes of p.
    '''

    _checkpartition(g, p)
    return [e for e, (u, v) in enumerate(g.edges) if p.classof[u] != p.classof[v]]


def quotient(g, p):
    '''
    The graph G/P: one vertex per class of p (in canonical class order)
    and one edge for every edge of g joining two distinct classes.

    >>> g = MultiGraph(3, [(0, 1), (0, 2), (1, 2)])
    >>> quotient(g, Partition([[0, 1], [2]]))
    MultiGraph(2, [(0, 1), (0, 1)])
    >>> quotient(g, Partition.trivial(3)).m
    0
    '''

    _checkpartition(g, p)
    c = p.classof
    return MultiGraph(len(p), [(c[g.edges[e][0]], c[g.edges[e][1]]) for e in crossing_edges(g, p)])


def components(g, edgeset):
    '''
    Connected components of the spanning subgraph (V(g), edgeset).

    >>> g = MultiGraph(4, [(0, 1), (1, 2), (2, 3)])
    >>> components(g, [0, 2]).tolist()
    [[0, 1], [2, 3]]
    >>> components(g, []) == Partition.singletons(4)
    True
    '''

    edgeset = checkedgeids(edgeset, g.m)
    ds = DisjointSet(g.n)
    for e in edgeset:
        ds.merge(*g.edges[e])
    return Partition.fromlabels(ds.labels())


def restrict_components(g, edgeset, p):
    '''
    Splits every class X of p into the components of the subgraph
    induced on X by the edges of edgeset.  The result always refines p.

    >>> g = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    >>> restrict_components(g, [0, 2], Partition.trivial(4)).tolist()
    [[0, 1], [2, 3]]
    >>> restrict_components(g, [0, 1, 2], Partition([[0, 2], [1, 3]])).tolist()
    [[0], [1], [2], [3]]
    '''

    _checkpartition(g, p)
    edgeset = checkedgeids(edgeset, g.m)
    ds = DisjointSet(g.n)
    for e in edgeset:
        u, v = g.edges[e]
        if p.classof[u] == p.classof[v]:
            ds.merge(u, v)
    return Partition.fromlabels(ds.labels())


def is_connected(g, edgeset):
    edgeset = checkedgeids(edgeset, g.m)
    ds = DisjointSet(g.n)
    pieces = g.n
    for e in edgeset:
        if ds.merge(*g.edges[e]):
            pieces -= 1
    return pieces == 1


def spanning_forest(g, edgeset, reverse=False):
    '''
    Greedy forest: scan edgeset by ascending id (descending when
    reverse) and keep every edge that joins two different trees.
    Loops are never kept.

    >>> g = MultiGraph(3, [(0, 1), (1, 0), (1, 2), (2, 0), (2, 2)])
    >>> sorted(spanning_forest(g, range(5)))
    [0, 2]
    >>> sorted(spanning_forest(g, range(5), reverse=True))
    [2, 3]
    '''

    edgeset = checkedgeids(edgeset, g.m)
    ds = DisjointSet(g.n)
    kept = []
    for e in sorted(edgeset, reverse=reverse):
        if ds.merge(*g.edges[e]):
            kept.append(e)
    return frozenset(kept)


def cycle_edges(g, edgeset):
    '''
    The members of edgeset that lie on a cycle of (V(g), edgeset), i.e.
    everything but the bridges.  Loops count, and so do both edges of
    a parallel pair.

    One iterative low-link pass; the edge we arrived by is skipped by
    id rather than by endpoint, which is what makes parallel edges come
    out right.

    >>> g = MultiGraph(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 3), (0, 1)])
    >>> sorted(cycle_edges(g, range(6)))
    [0, 1, 2, 4, 5]
    >>> sorted(cycle_edges(g, [0, 1, 3]))
    []
    '''

    edgeset = checkedgeids(edgeset, g.m)
    adj = [[] for _ in range(g.n)]
    for e in sorted(edgeset):
        u, v = g.edges[e]
        if u != v:
            adj[u].append((e, v))
            adj[v].append((e, u))

    disc = [-1] * g.n
    low = [0] * g.n
    bridges = set()
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            descended = False
            for e, w in it:
                if e == via:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(adj[w])))
                    descended = True
                    break
                low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] > disc[u]:
                    bridges.add(via)
    return frozenset(edgeset - bridges)


def fundamental_cycle(g, treeedges, e):
    '''
    The unique cycle of treeedges + e, as edge ids in order along the
    cycle: the tree path from the first end of e to the second,
    followed by e itself.

    >>> g = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])
    >>> fundamental_cycle(g, [0, 1], 2)
    [0, 1, 2]
    >>> h = MultiGraph(2, [(0, 1), (1, 0)])
    >>> fundamental_cycle(h, [0], 1)
    [0, 1]
    '''

    treeedges = checkedgeids(treeedges, g.m)
    checkedgeids([e], g.m)
    if e in treeedges:
        raise NoCycleError('Edge %d is already a tree edge.' % e)
    if g.isloop(e):
        raise NoCycleError('Edge %d is a loop.' % e)
    start, end = g.edges[e]

    adj = [[] for _ in range(g.n)]
    for f in sorted(treeedges):
        u, v = g.edges[f]
        if u != v:
            adj[u].append((f, v))
            adj[v].append((f, u))
    via = {start: None}
    queue = deque([start])
    while queue and end not in via:
        x = queue.popleft()
        for f, y in adj[x]:
            if y not in via:
                via[y] = (f, x)
                queue.append(y)
    if end not in via:
        raise NoCycleError('Ends of edge %d are not joined by the tree edges.' % e)

    path = []
    x = end
    while via[x] is not None:
        f, x = via[x]
        path.append(f)
    path.reverse()
    return path + [e]
