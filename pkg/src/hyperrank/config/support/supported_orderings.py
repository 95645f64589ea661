"""Vertex ordering methods for sweep cuts."""

from __future__ import annotations

from hyperrank.utils import BaseEnum


class SupportedOrdering(str, BaseEnum):
    """Methods producing the vertex ordering swept by the normalized cut."""

    MLPPR = "mlppr"
    """Second eigenvector of the latent graph built from the MLPPR solution."""

    MPR = "mpr"
    """Tensor spectral clustering with the dangling-corrected MPR tensor."""

    GPR = "gpr"
    """Graph pseudo-PageRank on the clique expansion of the hypergraph."""

    RANDOM = "random"
    """Seeded random permutation, used as a baseline."""
