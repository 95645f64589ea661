"""Fixed-point solvers for multi-linear (pseudo-)PageRank."""

__all__ = [
    "PageRankProblem",
    "SolveReport",
    "contraction_constant",
    "equation_residual",
    "feasible_bound",
    "graph_problem",
    "mlppr_to_mpr",
    "mpr_residual",
    "mpr_to_mlppr",
    "phi_step",
    "solve",
    "solve_graph_pseudo_pagerank",
    "solve_mlppr",
    "solve_mpr",
    "step_residual",
    "unique_by_corollary",
]

from .conversion import mlppr_to_mpr, mpr_to_mlppr
from .diagnostics import (
    contraction_constant,
    equation_residual,
    feasible_bound,
    mpr_residual,
    step_residual,
    unique_by_corollary,
)
from .graph import graph_problem, solve_graph_pseudo_pagerank
from .mpr import solve_mpr
from .problem import PageRankProblem
from .report import SolveReport
from .solve import solve
from .tensor_splitting import phi_step, solve_mlppr
