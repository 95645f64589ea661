"""
Tensor-splitting fixed-point solver for multi-linear pseudo-PageRank.

Every iteration computes `z = alpha P_bar y^(k-1) + v` and rescales it to
`y = (e^T z)^(-(k-2)/(k-1)) z`, which keeps the iterate in the feasible set.
"""

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from hyperrank.config.support import SupportedModel
from hyperrank.utils import get_logger

from .diagnostics import (
    contraction_constant,
    equation_residual,
    step_residual,
    unique_by_corollary,
)
from .problem import PageRankProblem
from .report import SolveReport

logger = get_logger(__name__)

TOL_STEP = 1e-8
TOL_EQ = 1e-10
MAX_ITER = 100_000


def _rescale(z: NDArray, k: int) -> NDArray:
    return np.sum(z) ** (-(k - 2) / (k - 1)) * z


def phi_step(problem: PageRankProblem, y: ArrayLike, threads: int = 1) -> NDArray:
    """
    One step of the tensor-splitting iteration.

    Returns `(1 + alpha e^T P_bar y^(k-1))^(-(k-2)/(k-1)) (v + alpha P_bar y^(k-1))`.

    Parameters
    ----------
    problem : PageRankProblem
        Problem.
    y : ArrayLike
        Current iterate in the feasible set.
    threads : int, optional
        Number of contraction threads, by default 1.

    Returns
    -------
    NDArray
        Next iterate.
    """
    y = np.asarray(y, dtype=np.float64)
    z = problem.alpha * problem.p_bar.apply(y, threads=threads) + problem.v
    return _rescale(z, problem.k)


def solve_mlppr(
    problem: PageRankProblem,
    y0: Optional[ArrayLike] = None,
    tol_step: float = TOL_STEP,
    tol_eq: float = TOL_EQ,
    max_iter: int = MAX_ITER,
    threads: int = 1,
    record_iterates: bool = False,
) -> SolveReport:
    """
    Solve the multi-linear pseudo-PageRank problem by tensor splitting.

    Iterates `phi_step` until the relative step is at most `tol_step` or the relative
    equation residual is at most `tol_eq`.

    Parameters
    ----------
    problem : PageRankProblem
        Problem.
    y0 : ArrayLike, optional
        Starting point in the feasible set, by default `v`.
    tol_step : float, optional
        Step tolerance, by default 1e-8.
    tol_eq : float, optional
        Equation residual tolerance, by default 1e-10.
    max_iter : int, optional
        Maximum number of iterations, by default 1e5.
    threads : int, optional
        Number of contraction threads, by default 1.
    record_iterates : bool, optional
        Keep every iterate in the report, by default False.

    Returns
    -------
    SolveReport
        Solution and diagnostics. `converged` is False if `max_iter` was reached.

    Raises
    ------
    ValueError
        If `y0` has the wrong shape or negative entries.
    """
    k = problem.k
    alpha = problem.alpha
    p_bar = problem.p_bar

    y = problem.v.copy() if y0 is None else np.asarray(y0, dtype=np.float64)
    if y.shape != (problem.n,) or np.any(y < 0):
        raise ValueError("Starting point must be a nonnegative vector of length n.")

    varsigma = contraction_constant(k, alpha)
    iterates = [y.copy()] if record_iterates else None

    contracted = p_bar.apply(y, threads=threads)
    applies = 1
    residual_step = np.inf
    residual_eq = equation_residual(problem, y, contracted)
    converged = False
    iteration = 0

    while iteration < max_iter:
        iteration += 1
        y_new = _rescale(alpha * contracted + problem.v, k)
        contracted = p_bar.apply(y_new, threads=threads)
        applies += 1

        residual_step = step_residual(y_new, y)
        residual_eq = equation_residual(problem, y_new, contracted)
        y = y_new
        if iterates is not None:
            iterates.append(y.copy())

        if residual_step <= tol_step or residual_eq <= tol_eq:
            converged = True
            break

    report = SolveReport(
        y=y,
        iterations=iteration,
        residual_step=residual_step,
        residual_eq=residual_eq,
        varsigma=varsigma,
        unique_by_contraction=varsigma < 1,
        unique_by_corollary=unique_by_corollary(k, alpha),
        converged=converged,
        model=SupportedModel.MLPPR,
        work=applies * p_bar.work_per_apply,
        iterates=iterates,
    )

    if converged:
        logger.info(
            f"MLPPR converged in {iteration} iterations (step residual "
            f"{residual_step:.2e}, equation residual {residual_eq:.2e}, "
            f"varsigma {varsigma:.4f})."
        )
    else:
        logger.warning(
            f"MLPPR did not converge in {max_iter} iterations (step residual "
            f"{residual_step:.2e}, equation residual {residual_eq:.2e})."
        )
    return report
