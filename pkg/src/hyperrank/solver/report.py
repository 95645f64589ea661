"""Solver outcome."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np
from numpy.typing import NDArray

from hyperrank.config.support import SupportedModel


@dataclass
class SolveReport:
    """
    Outcome of a PageRank solve.

    Non-convergence is a reported state: `converged` is False and `y` holds the
    last iterate.

    Attributes
    ----------
    y : NDArray
        Solution, the MLPPR vector or the stochastic MPR vector.
    iterations : int
        Number of iterations performed.
    residual_step : float
        Relative step `||y_c - y_(c-1)||_inf / ||y_c||_1` of the last iteration.
    residual_eq : float
        Relative equation residual of `y`.
    varsigma : float
        Contraction constant of the problem.
    unique_by_contraction : bool
        Whether the contraction constant is below 1.
    unique_by_corollary : bool
        Whether `alpha < 1 / (k - 1)`.
    converged : bool
        Whether a stopping criterion was met.
    model : SupportedModel
        Solved problem type.
    work : int
        Total contraction operation count.
    iterates : list of NDArray, optional
        All iterates starting with the initial vector, when recorded.
    """

    y: NDArray
    iterations: int
    residual_step: float
    residual_eq: float
    varsigma: float
    unique_by_contraction: bool
    unique_by_corollary: bool
    converged: bool
    model: SupportedModel = SupportedModel.MLPPR
    work: int = 0
    iterates: Optional[list[NDArray]] = field(default=None, repr=False)

    def summary(self) -> dict[str, Any]:
        """
        Scalar fields as a JSON-serializable dictionary.

        Returns
        -------
        dict
            Summary without the solution vector.
        """
        return {
            "model": self.model.value,
            "converged": bool(self.converged),
            "iterations": int(self.iterations),
            "residual_step": float(self.residual_step),
            "residual_eq": float(self.residual_eq),
            "varsigma": float(self.varsigma),
            "unique_by_contraction": bool(self.unique_by_contraction),
            "unique_by_corollary": bool(self.unique_by_corollary),
            "work": int(self.work),
            "sum_y": float(np.sum(self.y)),
        }
