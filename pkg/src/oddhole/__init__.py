"""Smallest odd hole in a claw-free graph via quasi-line structure."""

from .graphs import HoleCertificate, Multigraph, SimpleGraph, parse_graph
from .pipeline import PipelineResult, shortest_odd_hole

__all__ = [
    "HoleCertificate",
    "Multigraph",
    "SimpleGraph",
    "PipelineResult",
    "parse_graph",
    "shortest_odd_hole",
]
