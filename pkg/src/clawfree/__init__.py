"""Structural toolkit for hamiltonicity of claw-free graphs.

Induced-pattern search with end-vertex degree conditions, closure of
claw-free graphs, region decomposition, named families, exact cycle
solvers and exhaustive verification sweeps.
"""

from .closure import ClosureTrace, closure, complete_at, eligible_vertices, is_closed
from .cycles import hamilton_cycle, is_hamiltonian, longest_cycle
from .enumeration import enumerate_labeled, enumerate_unlabeled
from .errors import (ClawError, FormatError, GraphInputError, PreconditionError,
                     UnsupportedSizeError)
from .families import BrousekSpec, LabeledGraph, brousek, fig2, line_graph
from .formats import encode_graph6, parse_graph6
from .graph import Graph, are_isomorphic, distance, induced_subgraph, is_two_connected
from .patterns import Pattern, find_induced, is_free, make_pattern, phi_end_vertex_set, phi_holds
from .regions import RegionDecomposition, decompose, preimage

__version__ = "0.1.0"

__all__ = [
    "BrousekSpec", "ClawError", "ClosureTrace", "FormatError", "Graph", "GraphInputError",
    "LabeledGraph", "Pattern", "PreconditionError", "RegionDecomposition", "UnsupportedSizeError",
    "are_isomorphic", "brousek", "closure", "complete_at", "decompose", "distance",
    "eligible_vertices", "encode_graph6", "enumerate_labeled", "enumerate_unlabeled", "fig2",
    "find_induced", "hamilton_cycle", "induced_subgraph", "is_closed", "is_free", "is_hamiltonian",
    "is_two_connected", "line_graph", "longest_cycle", "make_pattern", "parse_graph6",
    "phi_end_vertex_set", "phi_holds", "preimage",
]
