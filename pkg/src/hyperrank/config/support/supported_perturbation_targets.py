"""Perturbation targets of the sensitivity experiment."""

from __future__ import annotations

from hyperrank.utils import BaseEnum


class SupportedPerturbationTarget(str, BaseEnum):
    """Which part of the MLPPR problem is perturbed."""

    V = "v"
    """Only the stochastic vector."""

    TENSOR = "tensor"
    """Only the non-dangling fibers of the substochastic tensor."""

    BOTH = "both"
    """Both the stochastic vector and the tensor."""
