#!/usr/bin/env python
# -*- coding: utf-8 -*-


'''
Result documents (JSON) and DOT drawings.

Trees are lists of edge ids into the graph file's edge order; classes
are lists of 1-based vertices in canonical order.  Key order is fixed
so that the same result always serializes to the same bytes.
'''


import json
from collections import OrderedDict
try:
    ModuleNotFoundError
except:
    ModuleNotFoundError = ImportError

try:
    from .miscfuncs import isitint, GraphFormatError
    from .partition import Partition
    from .multigraph import crossing_edges
except Exception as e:
    if type(e) != ImportError and \
       type(e) != ModuleNotFoundError and \
       type(e) != ValueError and \
       type(e) != SystemError:
        raise Exception("Unknown problem with imports.")
    from miscfuncs import isitint, GraphFormatError
    from partition import Partition
    from multigraph import crossing_edges


PALETTE = ('red', 'blue', 'darkgreen', 'orange', 'purple', 'brown', 'deeppink', 'cyan4')


def _certificatefields(g, p, k):
    return [
        ('classes', p.tolist(1)),
        ('crossing_edges', len(crossing_edges(g, p))),
        ('bound', k * (len(p) - 1)),
    ]


def result_document(g, result, trace=False, reverse=False):
    '''
    The document for a PackResult, an OrderedDict in output order.
    '''

    if result.ispacking:
        doc = OrderedDict([('verdict', 'packing'), ('k', result.k),
                           ('trees', [sorted(tree) for tree in result.trees])])
    else:
        doc = OrderedDict([('verdict', 'certificate'), ('k', result.k)])
        doc.update(_certificatefields(g, result.certificate, result.k))
    if trace:
        if reverse:
            doc['seedtree_order'] = 'reverse'
        doc['trace'] = [_ordered(x.todict()) for x in result.traces]
    return doc


def stp_document(g, kmax, certificate):
    doc = OrderedDict([('verdict', 'stp'), ('k_max', kmax)])
    doc.update(_certificatefields(g, certificate, kmax + 1))
    return doc


def oracle_document(k, report):
    return OrderedDict([('verdict', 'oracle'), ('k', k), ('margin', report.margin),
                        ('classes', report.witness.tolist(1))])


def _ordered(d):
    order = ('stage', 'e', 'm', 'c_m', 'cycle', 'e_prime', 'j', 'class_p', 'class_q', 'sequence')
    out = OrderedDict((key, d[key]) for key in order if key in d)
    if 'sequence' in out:
        out['sequence'] = [OrderedDict([('classes', s['classes']), ('splitter', s['splitter'])])
                           for s in out['sequence']]
    return out


def dumps(doc):
    '''
    >>> dumps(OrderedDict([('verdict', 'packing'), ('k', 0), ('trees', [])]))
    '{"verdict":"packing","k":0,"trees":[]}'
    '''

    return json.dumps(doc, separators=(',', ':'))


class ResultDocument(object):
    '''
    A parsed document, checked against the graph it claims to be about.
    trees is a list of edge-id lists, certificate a Partition.
    '''

    def __init__(self, verdict, k, trees=None, certificate=None, trace=None, reverse=False):
        self.verdict = verdict
        self.k = k
        self.trees = trees
        self.certificate = certificate
        self.trace = trace
        self.reverse = reverse


def _intlist(value, what):
    if not isinstance(value, list) or not all(isitint(x) for x in value):
        raise GraphFormatError('%s must be a list of integers.' % what)
    return value


def read_document(text, g):
    try:
        doc = json.loads(text)
    except ValueError as e:
        raise GraphFormatError('Result document is not JSON: %s' % e)
    if not isinstance(doc, dict):
        raise GraphFormatError('Result document must be a JSON object.')
    verdict = doc.get('verdict')
    k = doc.get('k')
    if not isitint(k) or k < 0:
        raise GraphFormatError('Result document needs a non-negative integer k.')
    trace = doc.get('trace')
    if trace is not None and (not isinstance(trace, list) or not all(isinstance(x, dict) for x in trace)):
        raise GraphFormatError('trace must be a list of objects.')
    reverse = doc.get('seedtree_order', 'id') == 'reverse'
    if verdict == 'packing':
        trees = doc.get('trees')
        if not isinstance(trees, list):
            raise GraphFormatError('Packing document needs a trees list.')
        trees = [_intlist(tree, 'Each tree') for tree in trees]
        return ResultDocument(verdict, k, trees=trees, trace=trace, reverse=reverse)
    if verdict == 'certificate':
        classes = doc.get('classes')
        if not isinstance(classes, list):
            raise GraphFormatError('Certificate document needs a classes list.')
        classes = [[v - 1 for v in _intlist(c, 'Each class')] for c in classes]
        return ResultDocument(verdict, k, certificate=Partition(classes, g.n),
                              trace=trace, reverse=reverse)
    raise GraphFormatError('Unknown verdict %r.' % (verdict,))


def to_dot(g, trees=None, certificate=None):
    '''
    DOT text for g.  Tree edges are drawn in the palette colors, other
    edges grey; with a certificate, its classes become clusters and the
    edges between classes are dashed.

    >>> from simpletreepacking.multigraph import MultiGraph
    >>> print(to_dot(MultiGraph(2, [(0, 1), (1, 1)]), trees=[[0]]))
    graph G {
      node [shape=circle];
      1;
      2;
      1 -- 2 [color=red, label="0"];
      2 -- 2 [color=grey, label="1"];
    }
    '''

    colorof = {}
    for i, tree in enumerate(trees or ()):
        for e in tree:
            colorof[e] = PALETTE[i % len(PALETTE)]
    lines = ['graph G {', '  node [shape=circle];']
    if certificate is not None:
        for i, c in enumerate(certificate.classes):
            lines.append('  subgraph cluster_%d {' % i)
            lines.extend('    %d;' % (v + 1) for v in c)
            lines.append('  }')
    else:
        lines.extend('  %d;' % (v + 1) for v in range(g.n))
    for e, (u, v) in enumerate(g.edges):
        attrs = ['color=%s' % colorof.get(e, 'grey')]
        if certificate is not None and not certificate.sameclass(u, v):
            attrs.append('style=dashed')
        attrs.append('label="%d"' % e)
        lines.append('  %d -- %d [%s];' % (u + 1, v + 1, ', '.join(attrs)))
    lines.append('}')
    return '\n'.join(lines)
