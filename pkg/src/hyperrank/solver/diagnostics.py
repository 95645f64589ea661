"""Convergence diagnostics and uniqueness conditions."""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

import numpy as np
from numpy.typing import NDArray

if TYPE_CHECKING:
    from .problem import PageRankProblem


def contraction_constant(k: int, alpha: float) -> float:
    """
    Contraction constant `(2k - 3) alpha (1 - alpha)^(-(k-2)/(k-1))`.

    When it is below 1 the tensor-splitting map is a contraction on the feasible set,
    the solution is unique and the iteration converges linearly.

    Parameters
    ----------
    k : int
        Tensor order, at least 2.
    alpha : float
        Probability in [0, 1).

    Returns
    -------
    float
        Contraction constant.

    Raises
    ------
    ValueError
        If `k < 2` or `alpha` is outside [0, 1).

    Examples
    --------
    >>> from hyperrank.solver import contraction_constant
    >>> contraction_constant(2, 0.85)
    0.85
    >>> round(contraction_constant(3, 0.2), 4)
    0.6708
    """
    if k < 2:
        raise ValueError(f"Tensor order must be at least 2 (got {k}).")
    if not 0 <= alpha < 1:
        raise ValueError(f"Alpha must be in [0, 1) (got {alpha}).")
    return (2 * k - 3) * alpha * (1 - alpha) ** (-(k - 2) / (k - 1))


def unique_by_corollary(k: int, alpha: float) -> bool:
    """
    Whether `alpha < 1 / (k - 1)`, a sufficient condition for a unique solution.

    Parameters
    ----------
    k : int
        Tensor order.
    alpha : float
        Probability.

    Returns
    -------
    bool
        True when the condition holds.
    """
    return alpha < 1 / (k - 1)


def feasible_bound(k: int, alpha: float) -> float:
    """
    Upper bound `(1 - alpha)^(-1/(k-1))` on the sum of every solution.

    Parameters
    ----------
    k : int
        Tensor order.
    alpha : float
        Probability.

    Returns
    -------
    float
        Bound of the feasible set.
    """
    return (1 - alpha) ** (-1 / (k - 1))


def step_residual(y_new: NDArray, y_old: NDArray) -> float:
    """
    Relative step `||y_new - y_old||_inf / ||y_new||_1`.

    Parameters
    ----------
    y_new : NDArray
        Current iterate.
    y_old : NDArray
        Previous iterate.

    Returns
    -------
    float
        Step residual.
    """
    norm = np.sum(np.abs(y_new))
    if norm == 0:
        return float(np.inf)
    return float(np.max(np.abs(y_new - y_old)) / norm)


def equation_residual(
    problem: PageRankProblem, y: NDArray, contracted: Optional[NDArray] = None
) -> float:
    """
    Relative residual of the multi-linear pseudo-PageRank equation.

    Returns `||(e^T y)^(k-2) y - alpha P_bar y^(k-1) - v||_inf / ||y||_1^(k-1)`.

    Parameters
    ----------
    problem : PageRankProblem
        Problem.
    y : NDArray
        Candidate solution.
    contracted : NDArray, optional
        Precomputed `P_bar y^(k-1)`, by default computed here.

    Returns
    -------
    float
        Equation residual.
    """
    if contracted is None:
        contracted = problem.p_bar.apply(y)
    k = problem.k
    total = np.sum(y)
    residual = total ** (k - 2) * y - problem.alpha * contracted - problem.v
    norm = np.sum(np.abs(y)) ** (k - 1)
    if norm == 0:
        return float(np.inf)
    return float(np.max(np.abs(residual)) / norm)


def mpr_residual(
    problem: PageRankProblem, x: NDArray, contracted: Optional[NDArray] = None
) -> float:
    """
    Residual of the multi-linear PageRank equation.

    Returns `||alpha P x^(k-1) + (1 - alpha) v - x||_inf` with the
    dangling-corrected operator `P`.

    Parameters
    ----------
    problem : PageRankProblem
        Problem.
    x : NDArray
        Candidate stochastic solution.
    contracted : NDArray, optional
        Precomputed `P x^(k-1)`, by default computed here.

    Returns
    -------
    float
        Equation residual.
    """
    if contracted is None:
        contracted = problem.operator.apply(x)
    residual = problem.alpha * contracted + (1 - problem.alpha) * problem.v - x
    return float(np.max(np.abs(residual)))
