"""Supertoken graphs, graphs on alphabets, and exact metric invariants."""

from .assignment import Assignment, brute_force_assignment, solve_assignment
from .graphs import (
    Graph,
    GraphError,
    SizeCapError,
    builtin,
    complete_graph,
    cycle_graph,
    determinant,
    diameter,
    distance_matrix,
    eccentricity,
    path_graph,
    radius,
)
from .resolving import is_resolving, metric_dimension
from .supertoken import build_supertoken, build_token_graph, enumerate_configs, supertoken_distance

__version__ = "0.1.0"
