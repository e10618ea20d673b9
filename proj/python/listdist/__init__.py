"""Distinguishing edge colourings from per-edge colour lists."""

from ._core import (
    Graph,
    ListdistError,
    analyze,
    automorphisms,
    classify,
    colour,
    distinguishing_index,
    dot,
    feasible_from_lists,
    generate_lists,
    graph_from_edges,
    is_distinguishing,
    parse_edge_list,
    parse_graph6,
    probe_conjecture,
)

__all__ = [
    "Graph",
    "ListdistError",
    "analyze",
    "automorphisms",
    "classify",
    "colour",
    "distinguishing_index",
    "dot",
    "feasible_from_lists",
    "generate_lists",
    "graph_from_edges",
    "is_distinguishing",
    "parse_edge_list",
    "parse_graph6",
    "probe_conjecture",
]
