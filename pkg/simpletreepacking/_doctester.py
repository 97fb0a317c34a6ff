#!/usr/bin/env python
# -*- coding: utf-8 -*-


'''
Doctests for every module, plus the corpus checks that run the packer
against the brute-force oracle on a few hundred small random graphs.
Run under pytest or as python -m simpletreepacking._doctester, so that
raised exceptions carry their package path.
'''


from __future__ import print_function, division, absolute_import

import os
import json
import logging
import tempfile
try:
    ModuleNotFoundError
except:
    ModuleNotFoundError = ImportError

try:
    from .miscfuncs import *
    from .partition import *
    from .multigraph import *
    from .kpartition import *
    from .packer import *
    from .oracle import *
    from .graphfile import *
    from .documents import *
    from .cli import main
except Exception as e:
    if type(e) != ImportError and \
       type(e) != ModuleNotFoundError and \
       type(e) != ValueError and \
       type(e) != SystemError:
        raise Exception("Unknown problem with imports.")
    from miscfuncs import *
    from partition import *
    from multigraph import *
    from kpartition import *
    from packer import *
    from oracle import *
    from graphfile import *
    from documents import *
    from cli import main


logger = logging.getLogger(__name__)


CORPUS_SIZE = 500
CORPUS_SEED = 20170423


def corpus(size=CORPUS_SIZE, seed=CORPUS_SEED):
    '''
    (graph, k) pairs with 2 <= n <= 6, 0 <= m <= 12 and k in 1..3, all
    drawn from one SplitMix64 stream so the corpus never changes.
    '''

    r = SplitMix64(seed)
    for _ in range(size):
        n = 2 + r.below(5)
        m = r.below(13)
        k = 1 + r.below(3)
        yield random_graph(n, m, r.next()), k


def random_kpartition(g, k, seed):
    r = SplitMix64(seed)
    return KPartition(k, [1 + r.below(k) for _ in range(g.m)])


def _vertices(g, edges):
    out = set()
    for e in edges:
        out.update(g.edges[e])
    return out


def corpus_problems(size=CORPUS_SIZE):
    '''
    Runs pack with every exchange checked and returns a list of
    descriptions of whatever disagreed with the oracle or with the
    exchange guarantees.  Empty means all good.
    '''

    problems = []
    most = 0
    for i, (g, k) in enumerate(corpus(size)):
        result = pack(g, k, checked=True)
        most = max([most] + result.exchanges)
        report = density_margin(g, k)
        if result.ispacking != (report.margin >= 0):
            problems.append('%d: pack says %s, margin %d' % (i, result.ispacking, report.margin))
        if result.ispacking:
            ok, why = verify_packing(g, result.trees, k)
        else:
            ok, why = verify_certificate(g, result.certificate, k)
        if not ok:
            problems.append('%d: %s' % (i, why))
        if g.m < k * (g.n - 1) and result.ispacking:
            problems.append('%d: packed with too few edges' % i)
        if any(x > default_cap(g, j + 1) for j, x in enumerate(result.exchanges)):
            problems.append('%d: exchange count over the cap' % i)
        for trace in result.traces:
            if not (trace.j < trace.m and 1 <= trace.c_m <= trace.stage - 1):
                problems.append('%d: bad levels in %r' % (i, trace))
            if not _vertices(g, trace.cycle) <= set(trace.classq):
                problems.append('%d: cycle leaves Q in %r' % (i, trace))
            if not precedes(trace.old, trace.new, g) or precedes(trace.new, trace.old, g):
                problems.append('%d: no improvement in %r' % (i, trace))
    logger.info('corpus: at most %d exchanges in one stage', most)
    return problems


def corpus_replay_problems(size=CORPUS_SIZE):
    '''
    Every recorded trace, written out and read back as JSON, replays to
    the same result, and the same run always prints the same bytes.
    '''

    problems = []
    for i, (g, k) in enumerate(corpus(size)):
        result = pack(g, k, record=True)
        text = dumps(result_document(g, result, trace=True))
        if text != dumps(result_document(g, pack(g, k, record=True), trace=True)):
            problems.append('%d: output not deterministic' % i)
        records = json.loads(text)['trace']
        replayed = replay_trace(g, k, records)
        if replayed.trees != result.trees or replayed.certificate != result.certificate:
            problems.append('%d: replay ends elsewhere' % i)
        if records:
            records[-1]['e_prime'] = -1
            try:
                replay_trace(g, k, records)
                problems.append('%d: tampered trace accepted' % i)
            except TraceMismatchError:
                pass
    return problems


def corpus_definition_problems(size=CORPUS_SIZE):
    '''
    The fast routines against their by-the-definition counterparts on
    random k-partitions of the corpus graphs.
    '''

    problems = []
    for i, (g, k) in enumerate(corpus(size)):
        if sorted(cycle_edges(g, range(g.m))) != sorted(cycle_edges_by_removal(g, range(g.m))):
            problems.append('%d: cycle edges' % i)
        t = random_kpartition(g, k, i)
        seq = build_sequence(g, t)
        steps, terminal = sequence_by_definition(g, t)
        if list(seq.steps) != steps or seq.terminal != terminal:
            problems.append('%d: sequence' % i)
        if list(edge_levels(g, t, seq)) != levels_by_definition(g, t):
            problems.append('%d: levels' % i)
        if parse_graph(serialize_graph(g)) != g:
            problems.append('%d: file round trip' % i)
        if quotient(g, Partition.singletons(g.n)).m != g.m - len(g.loops()):
            problems.append('%d: quotient by singletons' % i)
        edgeset = t.colorclass(1)
        if restrict_components(g, edgeset, Partition.trivial(g.n)) != components(g, edgeset):
            problems.append('%d: restricted to the trivial partition' % i)
        if g.n <= 5:
            for p in enumerate_partitions(g.n):
                if len(crossing_edges(g, p)) != quotient(g, p).m:
                    problems.append('%d: crossing edges of %r' % (i, p))
                if not refines(restrict_components(g, edgeset, p), p):
                    problems.append('%d: restriction to %r' % (i, p))
                shuffled = [list(reversed(c)) for c in reversed(p.classes)]
                if Partition(shuffled, g.n) != p or Partition(shuffled[1:] + shuffled[:1], g.n) != p:
                    problems.append('%d: class order matters for %r' % (i, p))
        tree = spanning_forest(g, range(g.m))
        for e in range(g.m):
            if e in tree or g.isloop(e):
                continue
            degree = {}
            for f in fundamental_cycle(g, tree, e):
                for v in g.edges[f]:
                    degree[v] = degree.get(v, 0) + 1
            if set(degree.values()) != {2}:
                problems.append('%d: cycle of edge %d' % (i, e))
    return problems


def exhaustive_problems(limit=120):
    '''
    pack against exhaustive search on the corpus graphs small enough
    for it.
    '''

    problems = []
    done = 0
    for i, (g, k) in enumerate(corpus()):
        if g.n > 4 or g.m > 8 or k > 2:
            continue
        if pack(g, k).ispacking != brute_force_packable(g, k):
            problems.append(i)
        done += 1
        if done == limit:
            break
    return problems


def complete_graph(n):
    return MultiGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def random_tree(n, seed):
    r = SplitMix64(seed)
    return MultiGraph(n, [(v, r.below(v)) for v in range(1, n)])


def multi_exchange_instance():
    '''
    The first graph from a fixed SplitMix64 stream whose packing makes at
    least two exchanges in one stage.
    '''

    r = SplitMix64(CORPUS_SEED)
    for _ in range(10000):
        n = 4 + r.below(5)
        k = 2 + r.below(2)
        g = random_graph(n, k * (n - 1) + r.below(4), r.next())
        exchanges = pack(g, k).exchanges
        if max(exchanges) >= 2:
            return g, k, max(exchanges)


def known_family_problems():
    '''
    K2, K4 and K6 pack 1, 2 and 3 trees; random trees never pack 2 and
    are refuted by the singletons; too few edges is always refuted; the
    oracle finds room for one tree exactly on connected graphs.
    '''

    problems = []
    for n, k in ((2, 1), (4, 2), (6, 3)):
        g = complete_graph(n)
        result = pack(g, k)
        if not (result.ispacking and verify_packing(g, result.trees, k)[0]):
            problems.append('K%d does not pack %d' % (n, k))
        if pack(g, k + 1).ispacking:
            problems.append('K%d packs %d' % (n, k + 1))
    doubled = MultiGraph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)])
    if not pack(doubled, 2).ispacking:
        problems.append('doubled triangle does not pack 2')
    for n in range(2, 9):
        for seed in range(10):
            g = random_tree(n, seed)
            if pack(g, 2).certificate != Partition.singletons(n):
                problems.append('tree %d/%d' % (n, seed))
    for g, k in corpus(100):
        if g.m < k * (g.n - 1) and pack(g, k).ispacking:
            problems.append('%r packs %d' % (g, k))
        if (density_margin(g, 1).margin < 0) == is_connected(g, range(g.m)):
            problems.append('%r: margin for one tree' % g)
    return problems


def _write(directory, name, text):
    path = os.path.join(directory, name)
    with open(path, 'w') as f:
        f.write(text)
    return path


def _read(path):
    with open(path) as f:
        return f.read()


FIGURE_EDGES = [(0, 1), (2, 3), (4, 5), (6, 7), (1, 4), (3, 6), (0, 7),
                (0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (0, 3)]

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

K4_FILE = 'p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n'


def miscfuncs_py___doctest():
    '''
    >>> isitstring('abc'), isitstring(3)
    (True, False)
    >>> isitint(2**70), isitint('7'), isitint(None)
    (True, False, False)

    >>> sorted(checkedgeids([2, 0, 2], 3))
    [0, 2]
    >>> checkedgeids([3], 3)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.GraphInputError: Edge id 3 out of range for 3 edges.

    >>> levelstr(INFINITY), levelstr(4)
    ('inf', '4')
    >>> INFINITY > 10**9
    True

    >>> str(GraphFormatError('Bad token.', 7))
    'Line 7: Bad token.'
    >>> issubclass(InvalidPartition, ValueError), issubclass(InternalInvariantError, GraphInputError)
    (True, False)
    '''
    return


def partition_py___doctest():
    '''
    >>> p = Partition([[3, 1], [0], [2]])
    >>> p.tolist(), p.tolist(1)
    ([[0], [1, 3], [2]], [[1], [2, 4], [3]])
    >>> len(p), p.n
    (3, 4)
    >>> p.classcontaining(3), p.classes[1]
    (1, (1, 3))
    >>> class_containing(p, 3) == p.classcontaining(3)
    True

    >>> Partition([[0, 1], [1, 2]])
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.InvalidPartition: Vertex 1 appears in two classes.
    >>> Partition([[0], [3]], 3)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.InvalidPartition: Vertex 3 out of range for 3 vertices.
    >>> Partition([[0], []])
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.InvalidPartition: Partition classes must be nonempty.

    >>> Partition.trivial(3), Partition.singletons(2)
    (Partition([[0, 1, 2]]), Partition([[0], [1]]))

    Refinement is a partial order with the singletons at the bottom and
    the trivial partition at the top.

    >>> ps = list(enumerate_partitions(4))
    >>> all(refines(a, a) and not strictly_refines(a, a) for a in ps)
    True
    >>> all(refines(Partition.singletons(4), a) and refines(a, Partition.trivial(4)) for a in ps)
    True
    >>> all(a == b for a in ps for b in ps if refines(a, b) and refines(b, a))
    True
    >>> all(refines(a, c) for a in ps for b in ps for c in ps if refines(a, b) and refines(b, c))
    True
    >>> p.refines(Partition([[0, 2], [1, 3]])), p.strictlyrefines(p)
    (True, False)

    >>> refines(Partition.trivial(2), Partition.trivial(3))
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.InvalidPartition: Cannot compare partitions of 2 and 3 vertices.
    '''
    return


def multigraph_py___doctest():
    '''
    >>> g = MultiGraph(4, [(0, 1), (0, 1), (1, 2), (3, 3)])
    >>> g
    MultiGraph(4, [(0, 1), (0, 1), (1, 2), (3, 3)])
    >>> g.loops()
    [3]
    >>> MultiGraph(0, [])
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.GraphInputError: Vertex count must be a positive integer, got 0.
    >>> MultiGraph(2, [(0, 2)])
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.GraphInputError: Edge 0 endpoint 2 out of range for 2 vertices.

    >>> crossing_edges(g, Partition([[0, 1], [2, 3]]))
    [2]
    >>> is_connected(g, range(4)), is_connected(g, [0, 2])
    (False, False)
    >>> is_connected(MultiGraph(1, [(0, 0)]), [0])
    True
    >>> sorted(cycle_edges(g, range(4)))
    [0, 1, 3]

    >>> fundamental_cycle(g, [0, 2], 1)
    [0, 1]
    >>> fundamental_cycle(g, [0, 2], 0)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.NoCycleError: Edge 0 is already a tree edge.
    >>> fundamental_cycle(g, [0, 2], 3)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.NoCycleError: Edge 3 is a loop.
    >>> fundamental_cycle(MultiGraph(3, [(0, 1), (1, 2)]), [], 1)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.NoCycleError: Ends of edge 1 are not joined by the tree edges.
    '''
    return


def kpartition_py___doctest():
    '''
    Two colors on eight vertices.  Color 1 is a spanning tree, color 2
    falls apart into {0,1,2,3} and {4,5,6,7}.

    >>> fig = MultiGraph(8, FIGURE_EDGES)
    >>> t = KPartition(2, [1] * 7 + [2] * 7)
    >>> seq = build_sequence(fig, t)
    >>> seq.splitters()
    [2, 1]
    >>> seq.partition(1).tolist()
    [[0, 1, 2, 3], [4, 5, 6, 7]]
    >>> seq.terminal.tolist(), seq.splitter(2), seq.splitter(40)
    ([[0, 1], [2, 3], [4, 5], [6, 7]], 3, 3)
    >>> edge_levels(fig, t, seq)
    (inf, inf, inf, inf, 0, 0, 0, inf, 1, inf, inf, 1, inf, 1)

    Moving edge 8 into the tree and edge 5 out of it connects color 2,
    and the sequence collapses to the trivial terminal partition.

    >>> t2 = t.recolor({8: 1, 5: 2})
    >>> seq2 = build_sequence(fig, t2)
    >>> len(seq2), seq2.terminal
    (0, Partition([[0, 1, 2, 3, 4, 5, 6, 7]]))
    >>> divergence_index(seq, seq2), divergence_index(seq, seq)
    (0, None)
    >>> precedes(t, t2, fig), precedes(t2, t, fig), precedes(t, t, fig)
    (True, False, False)

    >>> KPartition.fromclasses(fig, [range(7), range(7, 14)]) == t
    True
    >>> KPartition.fromclasses(fig, [range(7), range(6, 14)])
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.GraphInputError: Edge 6 is in two color classes.
    >>> KPartition(2, [1, 3])
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.GraphInputError: Edge 1 has color 3 outside 1..2.
    >>> precedes(t, KPartition(3, t.colorof), fig)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.GraphInputError: Cannot compare a 2-partition with a 3-partition.
    '''
    return


def packer_py___doctest():
    '''
    One exchange on the eight vertex example: edge 8 is the lowest
    level cycle edge of color 2, its cycle in tree 1 runs through
    edges 0, 1, 3, 5 and 6, and edge 5 has the lowest level there.

    >>> fig = MultiGraph(8, FIGURE_EDGES)
    >>> t = KPartition(2, [1] * 7 + [2] * 7)
    >>> density_check(fig, t) is None
    True
    >>> new, trace = exchange_step(fig, t)
    >>> trace
    ExchangeTrace(stage=2, e=8, m=1, c_m=1, eprime=5, j=0)
    >>> sorted(trace.cycle), trace.classp, len(trace.classq)
    ([0, 1, 3, 5, 6, 8], (0, 1, 2, 3), 8)
    >>> new == t.recolor({8: 1, 5: 2})
    True
    >>> check_exchange(fig, trace)
    0

    >>> result = pack(fig, 2, record=True)
    >>> result
    PackResult(2, trees=[[0, 1, 2, 3, 4, 6, 8], [5, 7, 9, 10, 11, 12, 13]])
    >>> result.exchanges
    [0, 1]

    Without edge 13 there is not enough room for a second tree, and the
    four pairs prove it: 5 edges cross them, 2 trees would need 6.

    >>> short = MultiGraph(8, FIGURE_EDGES[:13])
    >>> result = pack(short, 2)
    >>> result.certificate, result.stage
    (Partition([[0, 1], [2, 3], [4, 5], [6, 7]]), 2)
    >>> len(crossing_edges(short, result.certificate))
    5

    A pair of parallel edges takes part in the exchange.

    >>> g = parse_graph('p 3 4\\ne 1 2\\ne 2 3\\ne 1 3\\ne 1 3\\n')
    >>> result = pack(g, 2, record=True)
    >>> result.traces
    [ExchangeTrace(stage=2, e=2, m=1, c_m=1, eprime=0, j=0)]
    >>> result
    PackResult(2, trees=[[1, 2], [0, 3]])

    Two triangles glued at a vertex have 6 edges, short of the 8 two
    trees need.

    >>> bowtie = MultiGraph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    >>> pack(bowtie, 2).certificate
    Partition([[0], [1], [2], [3], [4]])
    >>> pack(bowtie, 1).ispacking
    True

    A stage that starts with a connected remainder makes no exchange.

    >>> k4 = MultiGraph(4, K4_EDGES)
    >>> stage = run_stage(k4, [frozenset([0, 3, 5])], frozenset([1, 2, 4]))
    >>> stage.exchanges, stage.certificate, sorted(stage.rest)
    (0, None, [1, 2, 4])

    The cap grows with the stage, whatever k the caller asked for.

    >>> default_cap(k4, 1), default_cap(k4, 2)
    (24, 48)

    >>> pack(k4, 0)
    PackResult(0, trees=[])
    >>> pack(MultiGraph(1, [(0, 0)]), 3)
    PackResult(3, trees=[[], [], []])
    >>> pack(k4, -1)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.GraphInputError: k must be a non-negative integer, got -1.

    >>> k6 = MultiGraph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])
    >>> stp_number(k6)[0]
    3
    >>> stp_number(MultiGraph(3, [(0, 1), (1, 2)]))
    (1, Partition([[0], [1], [2]]))
    >>> stp_number(MultiGraph(4, [(0, 1), (2, 3)]))
    (0, Partition([[0, 1], [2, 3]]))
    >>> stp_number(MultiGraph(1, []))
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.UnboundedPackingError: A single vertex packs any number of empty trees.

    >>> records = [x.todict() for x in pack(fig, 2, record=True).traces]
    >>> replay_trace(fig, 2, records)
    PackResult(2, trees=[[0, 1, 2, 3, 4, 6, 8], [5, 7, 9, 10, 11, 12, 13]])
    >>> records[0]['j'] = 1
    >>> replay_trace(fig, 2, records)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.TraceMismatchError: Record 0: j is 1, re-derived 0.
    >>> replay_trace(fig, 2, [])
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.TraceMismatchError: Trace ends before stage 2 is finished.
    '''
    return


def oracle_py___doctest():
    '''
    >>> [len(list(enumerate_partitions(n))) for n in range(1, 9)]
    [1, 2, 5, 15, 52, 203, 877, 4140]
    >>> len(set(enumerate_partitions(6)))
    203
    >>> list(enumerate_partitions(13))
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.GraphInputError: Partition enumeration supports 1 <= n <= 12, got 13.

    >>> k4 = MultiGraph(4, K4_EDGES)
    >>> density_margin(k4, 2)
    DensityReport(margin=0, witness=Partition([[0, 1, 2, 3]]))
    >>> density_margin(k4, 3).margin
    -3

    >>> verify_packing(k4, [[1, 2, 3], [0, 4, 5]], 2)
    (True, '')
    >>> verify_packing(k4, [[0, 1, 2], [3, 4, 5]], 2)
    (False, 'Tree 2 is not a spanning tree.')
    >>> verify_packing(k4, [[0, 1, 2], [2, 4, 5]], 2)
    (False, 'Trees 1 and 2 share edge 2.')
    >>> verify_packing(k4, [[0, 1, 2]], 2)
    (False, 'Expected 2 trees, got 1.')

    >>> verify_certificate(k4, Partition.singletons(4), 3)
    (True, '')
    >>> verify_certificate(k4, Partition.singletons(4), 2)
    (False, '6 edges cross the 4 classes, not fewer than 6.')

    >>> brute_force_packable(k4, 2), brute_force_packable(MultiGraph(3, [(0, 1), (1, 2), (0, 2)]), 2)
    (True, False)
    '''
    return


def graphfile_py___doctest():
    '''
    >>> a, b = SplitMix64(42), SplitMix64(42)
    >>> [a.next() for _ in range(5)] == [b.next() for _ in range(5)]
    True
    >>> random_graph(5, 7, 9) == random_graph(5, 7, 9)
    True
    >>> random_graph(5, 7, 9).m, random_graph(1, 3, 0).edges
    (7, ((0, 0), (0, 0), (0, 0)))

    >>> text = serialize_graph(MultiGraph(3, [(0, 1), (2, 2)]), comments=['two edges'])
    >>> print(text.rstrip())
    c two edges
    p 3 2
    e 1 2
    e 3 3
    >>> parse_graph(text.splitlines(True))
    MultiGraph(3, [(0, 1), (2, 2)])

    >>> def why(text):
    ...     try:
    ...         parse_graph(text)
    ...     except GraphFormatError as e:
    ...         print(e)
    >>> why('e 1 2\\n')
    Line 1: Edge line before the header.
    >>> why('c hi\\np 2 1\\n\\ne 1 x\\n')
    Line 4: Vertex 'x' is not an integer.
    >>> why('p 2 2\\ne 1 2\\n')
    Line 2: Header announced 2 edges, found 1.
    >>> why('p 2 0\\np 2 0\\n')
    Line 2: Second header line (first was line 1).
    >>> why('q 1 2\\n')
    Line 1: Unknown line type 'q'.
    '''
    return


def documents_py___doctest():
    '''
    >>> k4 = MultiGraph(4, K4_EDGES)
    >>> print(dumps(result_document(k4, pack(k4, 3))))
    {"verdict":"certificate","k":3,"classes":[[1],[2],[3],[4]],"crossing_edges":6,"bound":9}
    >>> print(dumps(stp_document(k4, 2, Partition.singletons(4))))
    {"verdict":"stp","k_max":2,"classes":[[1],[2],[3],[4]],"crossing_edges":6,"bound":9}
    >>> print(dumps(oracle_document(2, density_margin(k4, 2))))
    {"verdict":"oracle","k":2,"margin":0,"classes":[[1,2,3,4]]}

    >>> doc = read_document('{"verdict":"certificate","k":3,"classes":[[2,1],[3],[4]]}', k4)
    >>> doc.verdict, doc.k, doc.certificate, doc.trace
    ('certificate', 3, Partition([[0, 1], [2], [3]]), None)
    >>> read_document('{"verdict":"packing","k":1,"trees":[[0,"1"]]}', k4)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.GraphFormatError: Each tree must be a list of integers.
    >>> read_document('{"verdict":"certificate","k":1,"classes":[[1,2]]}', k4)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.InvalidPartition: Classes do not cover all 4 vertices.
    >>> read_document('[]', k4)
    Traceback (most recent call last):
    ...
    simpletreepacking.miscfuncs.GraphFormatError: Result document must be a JSON object.

    >>> print(to_dot(MultiGraph(3, [(0, 1), (1, 2)]), certificate=Partition([[0, 1], [2]])))
    graph G {
      node [shape=circle];
      subgraph cluster_0 {
        1;
        2;
      }
      subgraph cluster_1 {
        3;
      }
      1 -- 2 [color=grey, label="0"];
      2 -- 3 [color=grey, style=dashed, label="1"];
    }
    '''
    return


def cli_py___doctest():
    '''
    >>> d = tempfile.mkdtemp()
    >>> k4 = _write(d, 'k4.col', K4_FILE)
    >>> main(['pack', k4, '2'])
    {"verdict":"packing","k":2,"trees":[[1,2,3],[0,4,5]]}
    0
    >>> main(['pack', k4, '3', '--text'])
    certificate k=3: 6 crossing edges < 9
    classes: {1} {2} {3} {4}
    0
    >>> main(['pack', k4, '2', '--trace', '-o', os.path.join(d, 'k4.json')])
    0
    >>> print(_read(os.path.join(d, 'k4.json')).rstrip())
    {"verdict":"packing","k":2,"trees":[[1,2,3],[0,4,5]],"trace":[{"stage":2,"e":3,"m":1,"c_m":1,"cycle":[0,1,3],"e_prime":0,"j":0,"class_p":[2,3,4],"class_q":[1,2,3,4],"sequence":[{"classes":[[1,2,3,4]],"splitter":2},{"classes":[[1],[2,3,4]],"splitter":1}]}]}
    >>> main(['verify', k4, os.path.join(d, 'k4.json')])
    ok
    0

    A tampered trace, and trees that are not trees, are both rejected.

    >>> doc = json.loads(_read(os.path.join(d, 'k4.json')))
    >>> doc['trace'][0]['e_prime'] = 1
    >>> main(['verify', k4, _write(d, 'bad.json', json.dumps(doc))])
    1
    >>> main(['verify', k4, _write(d, 'bad2.json', '{"verdict":"packing","k":2,"trees":[[0,1,2],[3,4,5]]}')])
    1
    >>> main(['verify', k4, _write(d, 'bad3.json', '{"verdict":"packing","k":2,"trees":[[0,0,1],[3,4,5]]}')])
    1
    >>> main(['verify', k4, _write(d, 'bad4.json', '{"verdict":"certificate","k":2,"classes":[[1],[2],[3],[4]]}')])
    1
    >>> main(['verify', k4, _write(d, 'bad5.json', '{"verdict":"packing","k":2')])
    2

    The tree order used to split off each tree travels with the trace.

    >>> reverse = os.path.join(d, 'reverse.json')
    >>> main(['pack', k4, '2', '--trace', '--seedtree-order', 'reverse', '-o', reverse])
    0
    >>> json.loads(_read(reverse))['seedtree_order'] == 'reverse'
    True
    >>> main(['verify', k4, reverse])
    ok
    0

    >>> path = _write(d, 'path.col', 'p 3 2\\ne 1 2\\ne 2 3\\n')
    >>> main(['pack', path, '2'])
    {"verdict":"certificate","k":2,"classes":[[1],[2],[3]],"crossing_edges":2,"bound":4}
    0
    >>> main(['pack', _write(d, 'split.col', 'p 4 2\\ne 1 2\\ne 3 4\\n'), '1', '--text'])
    certificate k=1: 0 crossing edges < 1
    classes: {1 2} {3 4}
    0
    >>> main(['pack', path, '1', '--text'])
    packing k=1
    tree 1: 0 1
    0

    >>> main(['stp', k4])
    {"verdict":"stp","k_max":2,"classes":[[1],[2],[3],[4]],"crossing_edges":6,"bound":9}
    0
    >>> main(['stp', _write(d, 'one.col', 'p 1 0\\n')])
    {"verdict":"unbounded"}
    0
    >>> main(['oracle', k4, '2'])
    {"verdict":"oracle","k":2,"margin":0,"classes":[[1,2,3,4]]}
    0

    >>> main(['gen', '6', '9', '5', '-o', os.path.join(d, 'a.col')])
    0
    >>> main(['gen', '6', '9', '5', '-o', os.path.join(d, 'b.col')])
    0
    >>> _read(os.path.join(d, 'a.col')) == _read(os.path.join(d, 'b.col'))
    True
    >>> _read(os.path.join(d, 'a.col')).splitlines()[:2]
    ['c gen 6 9 5', 'p 6 9']

    Bad input exits with 2.

    >>> main(['pack', os.path.join(d, 'missing.col'), '2'])
    2
    >>> main(['pack', _write(d, 'bad.col', 'p 2 1\\ne 1 3\\n'), '1'])
    2
    >>> main(['oracle', _write(d, 'big.col', 'p 13 0\\n'), '1'])
    2

    >>> main(['dot', k4, os.path.join(d, 'k4.json'), '-o', os.path.join(d, 'k4.dot')])
    0
    >>> _read(os.path.join(d, 'k4.dot')).splitlines()[-2]
    '  3 -- 4 [color=blue, label="5"];'

    Files that are not UTF-8 and traces asked for in text form are bad
    input too.

    >>> latin = os.path.join(d, 'latin.col')
    >>> with open(latin, 'wb') as f:
    ...     _ = f.write(b'p 2 1\\ne 1 \\xff2\\n')
    >>> main(['pack', latin, '1'])
    2
    >>> main(['pack', k4, '2', '--trace', '--text'])
    2
    >>> main(['pack', k4, '2', '--json'])
    {"verdict":"packing","k":2,"trees":[[1,2,3],[0,4,5]]}
    0

    A stage that needs more exchanges than --cap allows exits with 3.

    >>> g, k, most = multi_exchange_instance()
    >>> hard = _write(d, 'hard.col', serialize_graph(g))
    >>> main(['pack', hard, str(k), '--cap', '1'])
    3
    >>> main(['pack', hard, str(k), '--cap', str(most), '-o', os.path.join(d, 'hard.json')])
    0
    '''
    return


def corpus___doctest():
    '''
    Stage by stage logging is silenced so that the exchange maximum
    stands out in the live log.

    >>> logging.getLogger(pack.__module__).setLevel(logging.WARNING)
    >>> corpus_problems()
    []
    >>> corpus_replay_problems()
    []
    >>> corpus_definition_problems()
    []
    >>> exhaustive_problems()
    []
    >>> known_family_problems()
    []
    >>> logging.getLogger(pack.__module__).setLevel(logging.NOTSET)
    '''
    return


if __name__ == "__main__":
    import doctest
    doctest.testmod()
