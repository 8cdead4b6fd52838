"""Exact search for small irredundant and mixed Ramsey numbers, with
certificates, plus numeric checks of the analytic bounds on t(3,n)."""

from .graph import Graph, GraphError, complement, decode_graph, encode_graph, induced_subgraph
from .irredundance import TwoColoring, has_irredundant_set, is_irredundant
from .search import Problem, compute_number, count_good, enumerate_good, good_coloring

__all__ = [
    "Graph",
    "GraphError",
    "Problem",
    "TwoColoring",
    "complement",
    "compute_number",
    "count_good",
    "decode_graph",
    "encode_graph",
    "enumerate_good",
    "good_coloring",
    "has_irredundant_set",
    "induced_subgraph",
    "is_irredundant",
]

__version__ = "0.1.0"
