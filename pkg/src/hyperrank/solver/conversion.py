"""Maps between multi-linear PageRank and pseudo-PageRank solutions."""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .diagnostics import equation_residual, mpr_residual
from .problem import PageRankProblem

ACCEPT_RESIDUAL = 1e-8
"""Largest input residual accepted by the conversions."""


def mpr_to_mlppr(
    x: ArrayLike, problem: PageRankProblem, max_residual: float = ACCEPT_RESIDUAL
) -> NDArray:
    """
    Map a multi-linear PageRank solution to a pseudo-PageRank solution.

    Returns `y = (1 - alpha e^T P_bar x^(k-1))^(-1/(k-1)) x`.

    Parameters
    ----------
    x : ArrayLike
        Stochastic solution of the multi-linear PageRank equation.
    problem : PageRankProblem
        Problem defining `P_bar`, `alpha` and `v`.
    max_residual : float, optional
        Largest accepted residual of `x`, by default 1e-8.

    Returns
    -------
    NDArray
        Solution of the multi-linear pseudo-PageRank equation.

    Raises
    ------
    ValueError
        If `x` does not solve the multi-linear PageRank equation to `max_residual`.
    """
    x = np.asarray(x, dtype=np.float64)
    residual = mpr_residual(problem, x)
    if residual > max_residual:
        raise ValueError(
            f"Refusing to convert: multi-linear PageRank residual {residual:.2e} "
            f"exceeds {max_residual:.0e}."
        )
    mass = np.sum(problem.p_bar.apply(x))
    return (1 - problem.alpha * mass) ** (-1 / (problem.k - 1)) * x


def mlppr_to_mpr(
    y: ArrayLike, problem: PageRankProblem, max_residual: float = ACCEPT_RESIDUAL
) -> NDArray:
    """
    Map a multi-linear pseudo-PageRank solution to a multi-linear PageRank solution.

    Returns `x = y / (e^T y)`.

    Parameters
    ----------
    y : ArrayLike
        Solution of the multi-linear pseudo-PageRank equation.
    problem : PageRankProblem
        Problem defining `P_bar`, `alpha` and `v`.
    max_residual : float, optional
        Largest accepted equation residual of `y`, by default 1e-8.

    Returns
    -------
    NDArray
        Stochastic solution of the multi-linear PageRank equation.

    Raises
    ------
    ValueError
        If `y` does not solve the pseudo-PageRank equation to `max_residual`.
    """
    y = np.asarray(y, dtype=np.float64)
    residual = equation_residual(problem, y)
    if residual > max_residual:
        raise ValueError(
            f"Refusing to convert: pseudo-PageRank residual {residual:.2e} exceeds "
            f"{max_residual:.0e}."
        )
    return y / np.sum(y)
