"""Eulerian supergraphs with a prescribed number of edges."""

from .engine import ExtendConfig, ExtensionCertificate, check_feasibility, extend, plan_walks
from .graph import Graph, from_edge_list, is_connected, is_eulerian, non_adjacent_pair, odd_vertices
from .pairing import MarkingOutcome, mark_edges, resolve_empty_clique
from .verify import brute_force_extendable, hierholzer_circuit, verify_extension

__all__ = [
    "ExtendConfig",
    "ExtensionCertificate",
    "Graph",
    "MarkingOutcome",
    "brute_force_extendable",
    "check_feasibility",
    "extend",
    "from_edge_list",
    "hierholzer_circuit",
    "is_connected",
    "is_eulerian",
    "mark_edges",
    "non_adjacent_pair",
    "odd_vertices",
    "plan_walks",
    "resolve_empty_clique",
    "verify_extension",
]
