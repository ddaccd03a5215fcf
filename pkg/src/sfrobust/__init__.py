"""Robustness measurement and link-addition enhancement for scale-free networks."""

from .graph import (
    DegreeStats,
    DuplicateEdgeError,
    Graph,
    GraphError,
    NodeError,
    SelfLoopError,
    bfs_distances,
    degree_stats,
    largest_component_fraction,
    largest_component_size,
)
from .metrics import CriticalFraction, betweenness, critical_fraction_random, efficiency

__all__ = [
    "CriticalFraction",
    "DegreeStats",
    "DuplicateEdgeError",
    "Graph",
    "GraphError",
    "NodeError",
    "SelfLoopError",
    "betweenness",
    "bfs_distances",
    "critical_fraction_random",
    "degree_stats",
    "efficiency",
    "largest_component_fraction",
    "largest_component_size",
]
