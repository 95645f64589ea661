"""Configuration-driven solve."""

from typing import Optional

from hyperrank.config import SolverConfig
from hyperrank.config.support import SupportedModel
from hyperrank.utils import resolve_threads

from .mpr import solve_mpr
from .problem import PageRankProblem
from .report import SolveReport
from .tensor_splitting import solve_mlppr


def solve(
    problem: PageRankProblem, config: Optional[SolverConfig] = None
) -> SolveReport:
    """
    Solve `problem` with the solver matching its model.

    Parameters
    ----------
    problem : PageRankProblem
        Problem.
    config : SolverConfig, optional
        Tolerances, shift and threads, by default the `SolverConfig` defaults. The
        `model`, `alpha` and `correction` fields are carried by the problem itself.

    Returns
    -------
    SolveReport
        Solution and diagnostics.
    """
    if config is None:
        config = SolverConfig()
    threads = resolve_threads(config.threads)

    if problem.model == SupportedModel.MPR:
        return solve_mpr(
            problem,
            shift=config.shift,
            tol_step=config.tol_step,
            tol_eq=config.tol_eq,
            max_iter=config.max_iter,
            threads=threads,
        )
    return solve_mlppr(
        problem,
        tol_step=config.tol_step,
        tol_eq=config.tol_eq,
        max_iter=config.max_iter,
        threads=threads,
    )
