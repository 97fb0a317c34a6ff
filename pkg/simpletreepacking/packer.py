#!/usr/bin/env python
# -*- coding: utf-8 -*-


'''
Finds k edge-disjoint spanning trees, or a partition P of the vertices
with fewer than k(|P|-1) edges between its classes, which proves that
no such trees exist.

The trees are built one stage at a time.  Stage t holds the t-1 trees
found so far plus the remaining edges as color t, and repeats:

  - if color t is connected, a tree is pulled out of it and the stage
    is done;
  - otherwise build the partition sequence.  If color t has fewer than
    |P|-1 edges between the classes of the terminal partition P, then
    P is the certificate;
  - otherwise some cycle of color t contains an edge e of finite level.
    Take the lowest-level one (lowest id on ties), let m be its level
    and c the splitter at m.  Put e into tree c, and take out of the
    cycle that e closes in tree c the edge e' of lowest level (lowest
    id on ties), which goes back to color t.

Each exchange moves the k-partition strictly up in the improvement
order, and there are finitely many k-partitions, so every stage ends.
The cap on exchanges per stage is only a guard against bugs.
'''


import logging
try:
    ModuleNotFoundError
except:
    ModuleNotFoundError = ImportError

try:
    from .miscfuncs import isitint, INFINITY, levelstr, GraphInputError, \
                           InternalInvariantError, TraceMismatchError, \
                           UnboundedPackingError
    from .partition import strictly_refines
    from .multigraph import crossing_edges, cycle_edges, fundamental_cycle, \
                            is_connected, spanning_forest
    from .kpartition import KPartition, build_sequence, edge_levels, \
                            divergence_index
except Exception as e:
    if type(e) != ImportError and \
       type(e) != ModuleNotFoundError and \
       type(e) != ValueError and \
       type(e) != SystemError:
        raise Exception("Unknown problem with imports.")
    from miscfuncs import isitint, INFINITY, levelstr, GraphInputError, \
                          InternalInvariantError, TraceMismatchError, \
                          UnboundedPackingError
    from partition import strictly_refines
    from multigraph import crossing_edges, cycle_edges, fundamental_cycle, \
                           is_connected, spanning_forest
    from kpartition import KPartition, build_sequence, edge_levels, \
                           divergence_index


logger = logging.getLogger(__name__)


# Record fields compared when a trace is replayed.
TRACE_FIELDS = ('stage', 'e', 'm', 'c_m', 'cycle', 'e_prime', 'j', 'class_p', 'class_q')


class ExchangeTrace(object):
    '''
    One exchange: e moved from color k into tree c_m, e' moved from
    tree c_m to color k.  classp is the class of P_m holding e, classq
    the class of P_j holding e'.  old and new are the k-partitions
    before and after, seq the sequence of old.
    '''

    def __init__(self, stage, e, m, classp, c_m, cycle, eprime, j, classq,
                 old=None, new=None, seq=None):
        self.stage = stage
        self.e = e
        self.m = m
        self.classp = tuple(classp)
        self.c_m = c_m
        self.cycle = tuple(cycle)
        self.eprime = eprime
        self.j = j
        self.classq = tuple(classq)
        self.old = old
        self.new = new
        self.seq = seq

    def todict(self):
        d = {
            'stage': self.stage,
            'e': self.e,
            'm': self.m,
            'c_m': self.c_m,
            'cycle': list(self.cycle),
            'e_prime': self.eprime,
            'j': self.j,
            'class_p': [v + 1 for v in self.classp],
            'class_q': [v + 1 for v in self.classq],
        }
        if self.seq is not None:
            d['sequence'] = [{'classes': p.tolist(1), 'splitter': c} for p, c in self.seq.steps]
        return d

    def __repr__(self):
        return 'ExchangeTrace(stage=%d, e=%d, m=%d, c_m=%d, eprime=%d, j=%d)' % \
               (self.stage, self.e, self.m, self.c_m, self.eprime, self.j)


class PackResult(object):
    '''
    Either trees (a list of k frozensets of edge ids) or certificate (a
    Partition), never both.  stage is the stage that produced the
    certificate, traces the exchanges made along the way.
    '''

    def __init__(self, k, trees=None, certificate=None, stage=None,
                 traces=(), exchanges=()):
        assert (trees is None) != (certificate is None)
        self.k = k
        self.trees = None if trees is None else [frozenset(x) for x in trees]
        self.certificate = certificate
        self.stage = stage
        self.traces = list(traces)
        self.exchanges = list(exchanges)

    @property
    def ispacking(self):
        return self.trees is not None

    def __repr__(self):
        if self.ispacking:
            return 'PackResult(%d, trees=%r)' % (self.k, [sorted(x) for x in self.trees])
        return 'PackResult(%d, certificate=%r)' % (self.k, self.certificate)


class StageResult(object):
    def __init__(self, kpartition, certificate=None, traces=(), exchanges=0):
        self.kpartition = kpartition
        self.certificate = certificate
        self.traces = list(traces)
        self.exchanges = exchanges

    @property
    def trees(self):
        return [self.kpartition.colorclass(c) for c in range(1, self.kpartition.k)]

    @property
    def rest(self):
        return self.kpartition.colorclass(self.kpartition.k)


def default_cap(g, k):
    # k is the color count of the running stage, not the k asked of pack
    return max(1, k * g.n * g.m)


def _istree(g, edges):
    return len(edges) == g.n - 1 and is_connected(g, edges)


def density_check(g, t, seq=None):
    '''
    For a k-partition whose colors 1..k-1 are spanning trees and whose
    color k is disconnected: returns the terminal partition P if color
    k has fewer than |P|-1 edges between its classes (then G/P has
    fewer than k(|P|-1) edges), otherwise None, meaning some cycle of
    color k holds an edge of finite level.
    '''

    if seq is None:
        seq = build_sequence(g, t)
    k = t.k
    for c in range(1, k):
        if len(t.colorclass(c)) != g.n - 1:
            raise InternalInvariantError('Color %d is not a spanning tree.' % c)
    if len(seq) == 0 or seq.splitter(0) != k:
        raise InternalInvariantError('Density check needs trees in colors 1..%d and color %d disconnected.' % (k - 1, k))
    p = seq.terminal
    rest = t.colorclass(k)
    x = sum(1 for e in crossing_edges(g, p) if e in rest)
    if x < len(p) - 1:
        return p
    return None


def exchange_step(g, t, seq=None, levels=None):
    '''
    Performs one exchange and returns (new k-partition, ExchangeTrace).
    Assumes density_check(g, t) returned None.
    '''

    if seq is None:
        seq = build_sequence(g, t)
    if levels is None:
        levels = edge_levels(g, t, seq)
    k = t.k

    candidates = [e for e in cycle_edges(g, t.colorclass(k)) if levels[e] != INFINITY]
    if not candidates:
        raise InternalInvariantError('No finite-level edge on a cycle of color %d.' % k)
    e = min(candidates, key=lambda x: (levels[x], x))
    m = levels[e]
    c_m = seq.splitter(m)
    if c_m >= k:
        raise InternalInvariantError('Splitter at level %d is %d, expected a tree color.' % (m, c_m))
    pm = seq.partition(m)
    classp = pm.classes[pm.classof[g.edges[e][0]]]

    cycle = fundamental_cycle(g, t.colorclass(c_m), e)
    eprime = min(cycle, key=lambda x: (levels[x], x))
    j = levels[eprime]
    if not j < m:
        raise InternalInvariantError("Level of e' (%s) is not below level of e (%d)." % (levelstr(j), m))
    pj = seq.partition(j)
    classq = pj.classes[pj.classof[g.edges[eprime][0]]]
    inq = set(classq)
    for f in cycle:
        if g.edges[f][0] not in inq or g.edges[f][1] not in inq:
            raise InternalInvariantError('Cycle of edge %d leaves class Q.' % e)

    new = t.recolor({e: c_m, eprime: k})
    logger.debug('stage %d: e=%d (level %d) into tree %d, e\'=%d (level %d) out',
                 k, e, m, c_m, eprime, j)
    return new, ExchangeTrace(k, e, m, classp, c_m, cycle, eprime, j, classq,
                              old=t, new=new, seq=seq)


def check_exchange(g, trace):
    '''
    Checks one recorded exchange against what the proof guarantees and
    returns the first index d where the old and new sequences differ.

    Colors 1..k-1 must still be spanning trees, d <= m+1, and at d the
    old partition strictly refines the new one or they are equal and
    the old splitter is smaller.  When d == m+1 that is the strict
    refinement of P_{m+1} by the old sequence.
    '''

    old, new = trace.old, trace.new
    for c in range(1, new.k):
        if not _istree(g, new.colorclass(c)):
            raise InternalInvariantError('Color %d is no longer a spanning tree.' % c)
    sa, sb = build_sequence(g, old), build_sequence(g, new)
    d = divergence_index(sa, sb)
    if d is None or d > trace.m + 1:
        raise InternalInvariantError('Sequences agree past index %d.' % (trace.m + 1))
    pa, pb = sa.partition(d), sb.partition(d)
    if not (strictly_refines(pa, pb) or (pa == pb and sa.splitter(d) < sb.splitter(d))):
        raise InternalInvariantError('Exchange at stage %d does not improve at index %d.' % (trace.stage, d))
    return d


def run_stage(g, trees, rest, cap=None, record=False, checked=False):
    '''
    Runs the exchange loop with colors 1..len(trees) fixed to the given
    spanning trees and every remaining edge in the last color.  Returns
    a StageResult holding either the final k-partition with a connected
    last color, or a certificate.

    The trees themselves can change along the way: each exchange swaps
    one edge of some tree.
    '''

    t = KPartition.fromclasses(g, list(trees) + [rest])
    k = t.k
    if cap is None:
        cap = default_cap(g, k)
    traces = []
    exchanges = 0
    while True:
        if is_connected(g, t.colorclass(k)):
            logger.info('stage %d: color %d connected after %d exchanges', k, k, exchanges)
            return StageResult(t, traces=traces, exchanges=exchanges)
        seq = build_sequence(g, t)
        certificate = density_check(g, t, seq)
        if certificate is not None:
            logger.info('stage %d: certificate with %d classes after %d exchanges',
                        k, len(certificate), exchanges)
            return StageResult(t, certificate=certificate, traces=traces, exchanges=exchanges)
        if exchanges >= cap:
            raise InternalInvariantError('Stage %d exceeded the cap of %d exchanges.' % (k, cap))
        new, trace = exchange_step(g, t, seq)
        if not _istree(g, new.colorclass(trace.c_m)):
            raise InternalInvariantError('Tree %d broken by exchange of %d and %d.' % (trace.c_m, trace.e, trace.eprime))
        if checked:
            check_exchange(g, trace)
        if record or checked:
            traces.append(trace)
        t = new
        exchanges += 1


def pack(g, k, cap=None, reverse=False, record=False, checked=False):
    '''
    k edge-disjoint spanning trees of g, or a certificate that there
    are none.  k = 0 is the empty packing, and on a single vertex every
    k packs (with empty trees).

    >>> from simpletreepacking.multigraph import MultiGraph
    >>> k4 = MultiGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    >>> pack(k4, 2).ispacking
    True
    >>> pack(k4, 3).certificate
    Partition([[0], [1], [2], [3]])
    '''

    if not isitint(k) or k < 0:
        raise GraphInputError('k must be a non-negative integer, got %r.' % (k,))
    trees = []
    rest = frozenset(range(g.m))
    traces = []
    exchanges = []
    for stage in range(1, k + 1):
        result = run_stage(g, trees, rest, cap=cap, record=record, checked=checked)
        traces.extend(result.traces)
        exchanges.append(result.exchanges)
        if result.certificate is not None:
            return PackResult(k, certificate=result.certificate, stage=stage,
                              traces=traces, exchanges=exchanges)
        tree = spanning_forest(g, result.rest, reverse=reverse)
        trees = result.trees + [tree]
        rest = result.rest - tree
    return PackResult(k, trees=trees, traces=traces, exchanges=exchanges)


def stp_number(g, cap=None):
    '''
    The largest k for which g has k edge-disjoint spanning trees, and a
    certificate that k+1 is impossible.

    Runs the stages up to m // (n-1) + 1 trees, which the singleton
    partition already rules out, so some stage must fail; the trees of
    the stages before it are the packing.
    '''

    if g.n <= 1:
        raise UnboundedPackingError('A single vertex packs any number of empty trees.')
    bound = g.m // (g.n - 1) + 1
    result = pack(g, bound, cap=cap)
    if result.ispacking:
        raise InternalInvariantError('Packed %d trees with only %d edges.' % (bound, g.m))
    return result.stage - 1, result.certificate


def replay_trace(g, k, records, reverse=False):
    '''
    Re-derives every recorded exchange from scratch and returns the
    PackResult the trace leads to.  records are dicts shaped like
    ExchangeTrace.todict(); any disagreement raises TraceMismatchError.
    '''

    records = list(records)
    pos = 0
    trees = []
    rest = frozenset(range(g.m))
    for stage in range(1, k + 1):
        t = KPartition.fromclasses(g, trees + [rest])
        while not is_connected(g, t.colorclass(stage)):
            seq = build_sequence(g, t)
            certificate = density_check(g, t, seq)
            if certificate is not None:
                if pos != len(records):
                    raise TraceMismatchError('Trace continues after the certificate of stage %d.' % stage)
                return PackResult(k, certificate=certificate, stage=stage)
            if pos >= len(records):
                raise TraceMismatchError('Trace ends before stage %d is finished.' % stage)
            t, trace = exchange_step(g, t, seq)
            derived = trace.todict()
            claimed = records[pos]
            for field in TRACE_FIELDS:
                if claimed.get(field) != derived[field]:
                    raise TraceMismatchError('Record %d: %s is %r, re-derived %r.' %
                                             (pos, field, claimed.get(field), derived[field]))
            pos += 1
        t_trees = [t.colorclass(c) for c in range(1, stage)]
        tree = spanning_forest(g, t.colorclass(stage), reverse=reverse)
        trees = t_trees + [tree]
        rest = t.colorclass(stage) - tree
    if pos != len(records):
        raise TraceMismatchError('Trace has %d records the packing never used.' % (len(records) - pos))
    return PackResult(k, trees=trees)
