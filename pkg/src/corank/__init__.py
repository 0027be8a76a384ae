"""Exact zero-forcing, algebraic co-rank and minimum-rank computations."""

__version__ = "0.1.0"

from .graphs import Graph, Digraph, CanonicalForm, canonical_form, complement, \
    line_graph, contains_induced, is_connected, is_tree
from .formats import parse_graph6, write_graph6, parse_digraph6, write_digraph6, \
    canonical_graph6, FormatError
from .config import RunConfig, DEFAULT_CONFIG
from .polyring import ZZ, QQ, GF
from .zeroforcing import closure, is_zero_forcing_set, mz, zero_forcing_number
from .criticalideals import gamma, generalized_laplacian, variety_box_search
from .minrank import exact_rank, mr_small, mrcr_bounds, tree_suite

__all__ = [
    "Graph", "Digraph", "CanonicalForm", "canonical_form", "complement",
    "line_graph", "contains_induced", "is_connected", "is_tree",
    "parse_graph6", "write_graph6", "parse_digraph6", "write_digraph6",
    "canonical_graph6", "FormatError", "RunConfig", "DEFAULT_CONFIG",
    "ZZ", "QQ", "GF", "closure", "is_zero_forcing_set", "mz",
    "zero_forcing_number", "gamma", "generalized_laplacian",
    "variety_box_search", "exact_rank", "mr_small", "mrcr_bounds", "tree_suite",
]
