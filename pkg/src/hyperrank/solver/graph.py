"""Pseudo-PageRank on graphs as the order-2 case of the tensor solver."""

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy import sparse

from hyperrank.hypergraph import normalize_substochastic
from hyperrank.tensor import SparseKTensor

from .problem import PageRankProblem
from .report import SolveReport
from .tensor_splitting import MAX_ITER, TOL_EQ, TOL_STEP, solve_mlppr


def graph_problem(
    adjacency: sparse.spmatrix, alpha: float, v: Optional[ArrayLike] = None
) -> PageRankProblem:
    """
    Pseudo-PageRank problem `(I - alpha A D^+) y = v` of a weighted graph.

    Parameters
    ----------
    adjacency : scipy.sparse.spmatrix
        Nonnegative matrix whose entry `(i, j)` weighs the arc from `j` to `i`.
    alpha : float
        Probability in [0, 1).
    v : ArrayLike, optional
        Stochastic vector, by default uniform.

    Returns
    -------
    PageRankProblem
        Order-2 problem with the column-normalized adjacency matrix.
    """
    coo = sparse.coo_matrix(adjacency)
    coo.sum_duplicates()
    coo.eliminate_zeros()
    n = coo.shape[0]
    matrix = SparseKTensor(
        n, 2, np.column_stack([coo.row, coo.col]).astype(np.int64), coo.data
    )
    p_bar, _ = normalize_substochastic(matrix)
    return PageRankProblem(p_bar, alpha, v)


def solve_graph_pseudo_pagerank(
    adjacency: sparse.spmatrix,
    alpha: float,
    v: Optional[ArrayLike] = None,
    tol_step: float = TOL_STEP,
    tol_eq: float = TOL_EQ,
    max_iter: int = MAX_ITER,
) -> SolveReport:
    """
    Solve the graph pseudo-PageRank problem with the tensor-splitting iteration.

    For order 2 the iteration reduces to `y <- v + alpha A D^+ y`.

    Parameters
    ----------
    adjacency : scipy.sparse.spmatrix
        Nonnegative matrix whose entry `(i, j)` weighs the arc from `j` to `i`.
    alpha : float
        Probability in [0, 1).
    v : ArrayLike, optional
        Stochastic vector, by default uniform.
    tol_step : float, optional
        Step tolerance, by default 1e-8.
    tol_eq : float, optional
        Equation residual tolerance, by default 1e-10.
    max_iter : int, optional
        Maximum number of iterations, by default 1e5.

    Returns
    -------
    SolveReport
        Solution and diagnostics.
    """
    problem = graph_problem(adjacency, alpha, v)
    return solve_mlppr(problem, tol_step=tol_step, tol_eq=tol_eq, max_iter=max_iter)
