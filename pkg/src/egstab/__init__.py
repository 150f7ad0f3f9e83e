"""Exact tools for circumference-constrained clique counting on small graphs."""

from .canon import are_isomorphic, canonical_form, canonical_labelling
from .cliques import clique_counts, clique_number, count_cliques
from .cycles import (circ, circumference, has_cycle_at_least, hamilton_path,
                     longest_cycle_through_edge, longest_path_between, longest_s_path)
from .enumeration import connected_graphs, two_connected_graphs
from .errors import (CapacityExceeded, EgstabError, InvalidInput, InvalidParameters, OutOfDomain,
                     ParseError)
from .families import (FamilyDescriptor, KFamilySpec, Member, build_gnk3, build_h, build_special,
                       build_z, enumerate_family, enumerate_k_family, f_ell_member, member_id,
                       validate_member)
from .formulas import (bound_pair_max, conjecture_bound, eg_bound, ell, f_s, fan_bound, g_s, h_s,
                       luo_bound)
from .graph import Graph, from_edges, is_connected, is_two_connected
from .graph6 import decode, encode
from .posa import PosaResult, crossing_pairs, posa_cycle
from .structure import disintegration, is_star_forest, star_forest_after_deletion
from .subgraph import contains_subgraph

__version__ = "0.1.0"

__all__ = [
    "are_isomorphic", "bound_pair_max", "build_gnk3", "build_h", "build_special", "build_z",
    "canonical_form", "canonical_labelling", "CapacityExceeded", "circ", "circumference",
    "clique_counts", "clique_number", "conjecture_bound", "connected_graphs", "contains_subgraph",
    "count_cliques", "crossing_pairs", "decode", "disintegration", "eg_bound", "EgstabError",
    "ell", "encode", "enumerate_family", "enumerate_k_family", "f_ell_member", "f_s",
    "FamilyDescriptor", "fan_bound", "from_edges", "g_s", "Graph", "h_s", "hamilton_path",
    "has_cycle_at_least", "InvalidInput", "InvalidParameters", "is_connected", "is_star_forest",
    "is_two_connected", "KFamilySpec", "longest_cycle_through_edge", "longest_path_between",
    "longest_s_path", "luo_bound", "Member", "member_id", "OutOfDomain", "ParseError",
    "posa_cycle", "PosaResult", "star_forest_after_deletion", "two_connected_graphs",
    "validate_member",
]
