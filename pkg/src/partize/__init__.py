"""Vertex partization on perfect graphs."""

from .graph import Graph, parse_dimacs, find_odd_hole_or_antihole, is_clique, is_independent
from .partition import ICPartition, Solution, hamming, label_vector, verify_solution
from .solver import solve, recognize, compress, short_vertex_partization

__all__ = [
    "Graph", "parse_dimacs", "find_odd_hole_or_antihole", "is_clique", "is_independent",
    "ICPartition", "Solution", "hamming", "label_vector", "verify_solution",
    "solve", "recognize", "compress", "short_vertex_partization",
]
__version__ = "0.1.0"
