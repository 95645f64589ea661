"""Spectral hypergraph partitioning."""

__all__ = [
    "LatentChain",
    "PartitionState",
    "SweepCut",
    "SymmetrizedChain",
    "bipartition",
    "edge_masses",
    "evaluate_cut",
    "h_curves",
    "normalized_cut_value",
    "order_vertices",
    "orient",
    "part_labels",
    "partition_state",
    "recursive_partition",
    "second_eigenvector",
    "spectral_state",
    "stationary_distribution",
    "sweep_cut",
    "vertex_volumes",
]

from .bipartition import bipartition, h_curves, order_vertices, partition_state
from .recursive import part_labels, recursive_partition
from .spectral import (
    LatentChain,
    PartitionState,
    SymmetrizedChain,
    orient,
    second_eigenvector,
    spectral_state,
    stationary_distribution,
)
from .sweep import (
    SweepCut,
    edge_masses,
    evaluate_cut,
    normalized_cut_value,
    sweep_cut,
    vertex_volumes,
)
