#!/usr/bin/env python
# -*- coding: utf-8 -*-


try:
    ModuleNotFoundError
except:
    ModuleNotFoundError = ImportError


# Imports made explicit because several helpers have common names

try:
    from .miscfuncs import INFINITY, GraphInputError, InvalidPartition, NoCycleError, GraphFormatError, UnboundedPackingError, InternalInvariantError, TraceMismatchError
    from .partition import Partition, refines, strictly_refines, class_containing
    from .multigraph import MultiGraph, crossing_edges, quotient, components, restrict_components, is_connected, spanning_forest, cycle_edges, fundamental_cycle
    from .kpartition import KPartition, PartitionSequence, build_sequence, edge_levels, divergence_index, precedes
    from .packer import ExchangeTrace, PackResult, density_check, exchange_step, check_exchange, run_stage, pack, stp_number, replay_trace
    from .oracle import MAX_ORACLE_VERTICES, DensityReport, enumerate_partitions, density_margin, verify_packing, verify_certificate
    from .graphfile import SplitMix64, random_graph, parse_graph, serialize_graph
    from .documents import result_document, stp_document, oracle_document, dumps, read_document, to_dot
except Exception as e:
    if type(e) != ImportError and \
       type(e) != ModuleNotFoundError and \
       type(e) != ValueError and \
       type(e) != SystemError:
        raise Exception("Unknown problem with imports.")
    from miscfuncs import INFINITY, GraphInputError, InvalidPartition, NoCycleError, GraphFormatError, UnboundedPackingError, InternalInvariantError, TraceMismatchError
    from partition import Partition, refines, strictly_refines, class_containing
    from multigraph import MultiGraph, crossing_edges, quotient, components, restrict_components, is_connected, spanning_forest, cycle_edges, fundamental_cycle
    from kpartition import KPartition, PartitionSequence, build_sequence, edge_levels, divergence_index, precedes
    from packer import ExchangeTrace, PackResult, density_check, exchange_step, check_exchange, run_stage, pack, stp_number, replay_trace
    from oracle import MAX_ORACLE_VERTICES, DensityReport, enumerate_partitions, density_margin, verify_packing, verify_certificate
    from graphfile import SplitMix64, random_graph, parse_graph, serialize_graph
    from documents import result_document, stp_document, oracle_document, dumps, read_document, to_dot
