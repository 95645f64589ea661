"""Shifted fixed-point solver for multi-linear PageRank."""

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from hyperrank.config.support import SupportedModel
from hyperrank.utils import check_stochastic, get_logger

from .diagnostics import (
    contraction_constant,
    mpr_residual,
    step_residual,
    unique_by_corollary,
)
from .problem import PageRankProblem
from .report import SolveReport
from .tensor_splitting import MAX_ITER, TOL_EQ, TOL_STEP

logger = get_logger(__name__)


def solve_mpr(
    problem: PageRankProblem,
    shift: float = 0.0,
    tol_step: float = TOL_STEP,
    tol_eq: float = TOL_EQ,
    max_iter: int = MAX_ITER,
    x0: Optional[ArrayLike] = None,
    threads: int = 1,
) -> SolveReport:
    """
    Solve `x = alpha P x^(k-1) + (1 - alpha) v` on the simplex.

    `P` is the dangling-corrected operator of the problem. The iteration is
    `x <- (alpha P x^(k-1) + (1 - alpha) v + shift x) / (1 + shift)`, renormalized to
    sum 1, and stops when the relative step is at most `tol_step` or the equation
    residual is at most `tol_eq`.

    Parameters
    ----------
    problem : PageRankProblem
        Problem.
    shift : float, optional
        Nonnegative shift, by default 0.
    tol_step : float, optional
        Step tolerance, by default 1e-8.
    tol_eq : float, optional
        Equation residual tolerance, by default 1e-10.
    max_iter : int, optional
        Maximum number of iterations, by default 1e5.
    x0 : ArrayLike, optional
        Stochastic starting point, by default `v`.
    threads : int, optional
        Number of contraction threads, by default 1.

    Returns
    -------
    SolveReport
        Stochastic solution and diagnostics.

    Raises
    ------
    ValueError
        If `shift` is negative or `x0` is not stochastic.
    """
    if shift < 0:
        raise ValueError(f"Shift must be nonnegative (got {shift}).")

    k = problem.k
    alpha = problem.alpha
    operator = problem.operator
    teleport = (1 - alpha) * problem.v

    x = problem.v.copy() if x0 is None else check_stochastic(x0, problem.n, atol=1e-9)
    varsigma = contraction_constant(k, alpha)

    contracted = operator.apply(x, threads=threads)
    applies = 1
    residual_step = np.inf
    residual_eq = mpr_residual(problem, x, contracted)
    converged = False
    iteration = 0

    while iteration < max_iter:
        iteration += 1
        x_new = (alpha * contracted + teleport + shift * x) / (1 + shift)
        x_new = x_new / np.sum(x_new)
        contracted = operator.apply(x_new, threads=threads)
        applies += 1

        residual_step = step_residual(x_new, x)
        residual_eq = mpr_residual(problem, x_new, contracted)
        x = x_new

        if residual_step <= tol_step or residual_eq <= tol_eq:
            converged = True
            break

    if converged:
        logger.info(
            f"MPR converged in {iteration} iterations (step residual "
            f"{residual_step:.2e}, equation residual {residual_eq:.2e})."
        )
    else:
        logger.warning(
            f"MPR did not converge in {max_iter} iterations (step residual "
            f"{residual_step:.2e}, equation residual {residual_eq:.2e})."
        )

    return SolveReport(
        y=x,
        iterations=iteration,
        residual_step=residual_step,
        residual_eq=residual_eq,
        varsigma=varsigma,
        unique_by_contraction=varsigma < 1,
        unique_by_corollary=unique_by_corollary(k, alpha),
        converged=converged,
        model=SupportedModel.MPR,
        work=applies * operator.work_per_apply,
    )
