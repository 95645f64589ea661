"""Network motif extraction."""

__all__ = [
    "DirectedGraph",
    "IngestStats",
    "d3c_hypergraph",
    "directed_cycles",
    "enumerate_d3c",
    "filter_network",
    "largest_strong_component",
]

from .d3c import (
    d3c_hypergraph,
    directed_cycles,
    enumerate_d3c,
    filter_network,
    largest_strong_component,
)
from .directed_graph import DirectedGraph, IngestStats
