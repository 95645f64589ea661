"""Partition configuration."""

from __future__ import annotations

from pprint import pformat
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class PartitionConfig(BaseModel):
    """
    Parameters of the spectral partitioning pipeline.

    Attributes
    ----------
    alpha : float
        Damping probability of the ordering solve and of the stationary distribution.
    ordering : {"mlppr", "mpr", "gpr", "random"}
        Method producing the vertex ordering.
    parts : int
        Target number of parts.
    eig_tol : float
        Tolerance of the eigenvector iterations.
    eig_max_iter : int
        Maximum number of eigenvector iterations.
    seed : int
        Seed of the random start vectors and of the random ordering.
    threads : int, optional
        Contraction threads of the ordering solve, by default resolved from
        `HYPERRANK_THREADS`.
    """

    model_config = ConfigDict(
        validate_assignment=True,
    )

    alpha: float = Field(default=0.99, ge=0.0, lt=1.0)
    ordering: Literal["mlppr", "mpr", "gpr", "random"] = "mlppr"
    parts: int = Field(default=2, ge=2)
    eig_tol: float = Field(default=1e-10, gt=0.0)
    eig_max_iter: int = Field(default=100_000, ge=1)
    seed: int = Field(default=0, ge=0)
    threads: Optional[int] = Field(default=None, ge=1)

    def __str__(self) -> str:
        """Pretty string representing the configuration.

        Returns
        -------
        str
            Pretty string.
        """
        return pformat(self.model_dump())
