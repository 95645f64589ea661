"""Solver configuration."""

from __future__ import annotations

from pprint import pformat
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class SolverConfig(BaseModel):
    """
    Parameters of the PageRank solvers.

    Attributes
    ----------
    model : {"mlppr", "mpr"}
        Problem to solve.
    alpha : float
        Damping probability in [0, 1).
    tol_step : float
        Relative step tolerance.
    tol_eq : float
        Relative equation residual tolerance.
    max_iter : int
        Maximum number of iterations.
    shift : float
        Shift of the multi-linear PageRank iteration.
    correction : {"explicit", "implicit"}
        Dangling correction mode of the multi-linear PageRank operator.
    threads : int, optional
        Contraction threads, by default resolved from `HYPERRANK_THREADS`.

    Examples
    --------
    >>> from hyperrank.config import SolverConfig
    >>> config = SolverConfig(alpha=0.2)
    >>> config.tol_step
    1e-08
    """

    model_config = ConfigDict(
        validate_assignment=True,
    )

    model: Literal["mlppr", "mpr"] = "mlppr"
    """Problem to solve, see `SupportedModel`."""

    alpha: float = Field(default=0.85, ge=0.0, lt=1.0)
    """Damping probability."""

    tol_step: float = Field(default=1e-8, gt=0.0)
    """Tolerance on `||y_c - y_(c-1)||_inf / ||y_c||_1`."""

    tol_eq: float = Field(default=1e-10, gt=0.0)
    """Tolerance on the relative equation residual."""

    max_iter: int = Field(default=100_000, ge=1)
    """Maximum number of iterations."""

    shift: float = Field(default=0.0, ge=0.0)
    """Shift of the multi-linear PageRank fixed-point iteration."""

    correction: Literal["explicit", "implicit"] = "implicit"
    """Dangling correction mode, see `SupportedCorrection`."""

    threads: Optional[int] = Field(default=None, ge=1)
    """Number of contraction threads."""

    def __str__(self) -> str:
        """Pretty string representing the configuration.

        Returns
        -------
        str
            Pretty string.
        """
        return pformat(self.model_dump())
