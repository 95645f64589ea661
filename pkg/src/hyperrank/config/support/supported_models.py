"""PageRank models supported by hyperrank."""

from __future__ import annotations

from hyperrank.utils import BaseEnum


class SupportedModel(str, BaseEnum):
    """PageRank models available in hyperrank."""

    MLPPR = "mlppr"
    """Multi-linear pseudo-PageRank, solved on the columnwise-substochastic tensor
    without any dangling correction."""

    MPR = "mpr"
    """Multi-linear PageRank, solved on the dangling-corrected columnwise-stochastic
    tensor."""
