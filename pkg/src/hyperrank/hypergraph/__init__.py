"""Hypergraph data model, adjacency tensors and dangling fiber handling."""

__all__ = [
    "DanglingFibers",
    "ImplicitCorrection",
    "RankOneUpdate",
    "UniformHypergraph",
    "adjacency_tensor",
    "as_dense",
    "contract_corrected",
    "dangling_correction",
    "dangling_fibers",
    "explicit_correction",
    "fiber_sums",
    "normalize_substochastic",
    "transition_tensor",
]

from .adjacency import adjacency_tensor, transition_tensor
from .dangling import (
    ImplicitCorrection,
    RankOneUpdate,
    as_dense,
    contract_corrected,
    dangling_correction,
    explicit_correction,
)
from .normalization import (
    DanglingFibers,
    dangling_fibers,
    fiber_sums,
    normalize_substochastic,
)
from .uniform_hypergraph import UniformHypergraph
