"""Closed neighborhood ideals of graphs: v-number, regularity and Hamming codes."""

from .domination import invariants, minimal_dominating_sets
from .graph import Graph, from_edge_list, from_graph6, parse_family, to_graph6
from .regularity import betti_table, regularity
from .vnumber import v_number, v_number_local

__version__ = "0.1.0"
