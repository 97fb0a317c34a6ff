#!/usr/bin/env python
# -*- coding: utf-8 -*-


'''
Command line front end.

    treepack pack FILE K [--trace] [--text] [--seedtree-order reverse] [--cap N] [-o OUT]
    treepack verify FILE DOCUMENT
    treepack stp FILE [--text] [-o OUT]
    treepack oracle FILE K [--text] [-o OUT]
    treepack gen N M SEED [-o OUT]
    treepack dot FILE [DOCUMENT] [-o OUT]

Exit status: 0 for any definitive answer, 1 when verify rejects a
document, 2 for bad input, 3 when the algorithm trips over one of its
own invariants (a bug, not a property of the input).
'''


from __future__ import print_function

import io
import sys
import logging
import argparse
try:
    ModuleNotFoundError
except:
    ModuleNotFoundError = ImportError

try:
    from .miscfuncs import GraphInputError, InternalInvariantError, \
                           TraceMismatchError, UnboundedPackingError
    from .multigraph import crossing_edges
    from .packer import pack, stp_number, replay_trace
    from .oracle import density_margin, verify_packing, verify_certificate
    from .graphfile import parse_graph, serialize_graph, random_graph
    from .documents import result_document, stp_document, oracle_document, \
                           dumps, read_document, to_dot
except Exception as e:
    if type(e) != ImportError and \
       type(e) != ModuleNotFoundError and \
       type(e) != ValueError and \
       type(e) != SystemError:
        raise Exception("Unknown problem with imports.")
    from miscfuncs import GraphInputError, InternalInvariantError, \
                          TraceMismatchError, UnboundedPackingError
    from multigraph import crossing_edges
    from packer import pack, stp_number, replay_trace
    from oracle import density_margin, verify_packing, verify_certificate
    from graphfile import parse_graph, serialize_graph, random_graph
    from documents import result_document, stp_document, oracle_document, \
                          dumps, read_document, to_dot


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def load_graph(path):
    with io.open(path, encoding='utf-8') as f:
        return parse_graph(f)


def _emit(text, output=None):
    if output is None:
        sys.stdout.write(text + '\n')
    else:
        with open(output, 'w') as f:
            f.write(text + '\n')


def _classes(p):
    return ' '.join('{%s}' % ' '.join(str(v + 1) for v in c) for c in p.classes)


def cmd_pack(path, k, trace=False, text=False, reverse=False, cap=None, output=None):
    g = load_graph(path)
    result = pack(g, k, cap=cap, reverse=reverse, record=trace)
    logger.info('pack: %d exchanges, per stage %r', sum(result.exchanges), result.exchanges)
    if not text:
        _emit(dumps(result_document(g, result, trace=trace, reverse=reverse)), output)
    elif result.ispacking:
        lines = ['packing k=%d' % k]
        for i, tree in enumerate(result.trees):
            lines.append('tree %d: %s' % (i + 1, ' '.join(str(e) for e in sorted(tree))))
        _emit('\n'.join(lines), output)
    else:
        p = result.certificate
        _emit('certificate k=%d: %d crossing edges < %d\nclasses: %s' %
              (k, len(crossing_edges(g, p)), k * (len(p) - 1), _classes(p)), output)
    return EXIT_OK


def cmd_verify(path, docpath):
    g = load_graph(path)
    with io.open(docpath, encoding='utf-8') as f:
        doc = read_document(f.read(), g)
    if doc.verdict == 'packing':
        ok, why = verify_packing(g, doc.trees, doc.k)
    else:
        ok, why = verify_certificate(g, doc.certificate, doc.k)
    if ok and doc.trace is not None:
        try:
            replayed = replay_trace(g, doc.k, doc.trace, reverse=doc.reverse)
        except TraceMismatchError as e:
            ok, why = False, str(e)
        else:
            if doc.verdict == 'packing':
                ok = replayed.ispacking and \
                     replayed.trees == [frozenset(tree) for tree in doc.trees]
            else:
                ok = not replayed.ispacking and replayed.certificate == doc.certificate
            if not ok:
                why = 'Replayed trace ends in a different result.'
    if not ok:
        sys.stderr.write('verification failed: %s\n' % why)
        return EXIT_REJECTED
    _emit('ok')
    return EXIT_OK


def cmd_stp(path, cap=None, text=False, output=None):
    g = load_graph(path)
    try:
        kmax, certificate = stp_number(g, cap=cap)
    except UnboundedPackingError:
        _emit('unbounded' if text else dumps({'verdict': 'unbounded'}), output)
        return EXIT_OK
    if text:
        _emit('k_max=%d\nclasses: %s' % (kmax, _classes(certificate)), output)
    else:
        _emit(dumps(stp_document(g, kmax, certificate)), output)
    return EXIT_OK


def cmd_oracle(path, k, text=False, output=None):
    g = load_graph(path)
    report = density_margin(g, k)
    if text:
        _emit('margin=%d\nclasses: %s' % (report.margin, _classes(report.witness)), output)
    else:
        _emit(dumps(oracle_document(k, report)), output)
    return EXIT_OK


def cmd_gen(n, m, seed, output=None):
    g = random_graph(n, m, seed)
    _emit(serialize_graph(g, comments=['gen %d %d %d' % (n, m, seed)]).rstrip('\n'), output)
    return EXIT_OK


def cmd_dot(path, docpath=None, output=None):
    g = load_graph(path)
    trees = certificate = None
    if docpath is not None:
        with io.open(docpath, encoding='utf-8') as f:
            doc = read_document(f.read(), g)
        trees, certificate = doc.trees, doc.certificate
    _emit(to_dot(g, trees=trees, certificate=certificate), output)
    return EXIT_OK


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('%r is negative' % text)
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('%r is not positive' % text)
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog='treepack',
        description='Edge-disjoint spanning trees, or a partition proving there are none.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log stage results (-v) or every exchange (-vv) to stderr')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('pack', help='find k disjoint spanning trees or a certificate')
    p.add_argument('file')
    p.add_argument('k', type=_nonnegative)
    p.add_argument('--trace', action='store_true', help='include every exchange in the output')
    p.add_argument('--json', dest='text', action='store_false', help='JSON output (default)')
    p.add_argument('--text', dest='text', action='store_true', help='plain text output')
    p.set_defaults(text=False)
    p.add_argument('--seedtree-order', choices=('id', 'reverse'), default='id',
                   help='edge order for pulling each tree out of a connected remainder')
    p.add_argument('--cap', type=_positive, default=None,
                   help='exchanges allowed per stage (default s*n*m in stage s)')
    p.add_argument('-o', '--output')

    p = sub.add_parser('verify', help='check a result document against its graph')
    p.add_argument('file')
    p.add_argument('document')

    p = sub.add_parser('stp', help='largest number of disjoint spanning trees')
    p.add_argument('file')
    p.add_argument('--cap', type=_positive, default=None)
    p.add_argument('--text', action='store_true')
    p.add_argument('-o', '--output')

    p = sub.add_parser('oracle', help='brute-force density margin (n <= 12)')
    p.add_argument('file')
    p.add_argument('k', type=_nonnegative)
    p.add_argument('--text', action='store_true')
    p.add_argument('-o', '--output')

    p = sub.add_parser('gen', help='random multigraph file from SplitMix64')
    p.add_argument('n', type=_positive)
    p.add_argument('m', type=_nonnegative)
    p.add_argument('seed', type=int)
    p.add_argument('-o', '--output')

    p = sub.add_parser('dot', help='DOT drawing of a graph and optionally a result')
    p.add_argument('file')
    p.add_argument('document', nargs='?')
    p.add_argument('-o', '--output')
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format='%(levelname)s: %(message)s')

    if args.command == 'pack' and args.trace and args.text:
        sys.stderr.write('error: --trace needs JSON output, drop --text\n')
        return EXIT_INPUT

    try:
        if args.command == 'pack':
            return cmd_pack(args.file, args.k, trace=args.trace, text=args.text,
                            reverse=args.seedtree_order == 'reverse', cap=args.cap,
                            output=args.output)
        if args.command == 'verify':
            return cmd_verify(args.file, args.document)
        if args.command == 'stp':
            return cmd_stp(args.file, cap=args.cap, text=args.text, output=args.output)
        if args.command == 'oracle':
            return cmd_oracle(args.file, args.k, text=args.text, output=args.output)
        if args.command == 'gen':
            return cmd_gen(args.n, args.m, args.seed, output=args.output)
        return cmd_dot(args.file, args.document, output=args.output)
    except (GraphInputError, IOError, OSError, UnicodeDecodeError) as e:
        sys.stderr.write('error: %s\n' % e)
        return EXIT_INPUT
    except InternalInvariantError as e:
        sys.stderr.write('internal error: %s\n' % e)
        return EXIT_INTERNAL


if __name__ == '__main__':
    sys.exit(main())
