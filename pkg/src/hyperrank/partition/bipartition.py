"""PageRank-based hypergraph bipartition."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from hyperrank.config.support import SupportedModel, SupportedOrdering
from hyperrank.hypergraph import UniformHypergraph
from hyperrank.solver import (
    PageRankProblem,
    solve_graph_pseudo_pagerank,
    solve_mlppr,
    solve_mpr,
)
from hyperrank.utils import check_stochastic, get_logger, uniform

from .spectral import EIG_MAX_ITER, EIG_TOL, PartitionState, spectral_state
from .sweep import SweepCut, sweep_cut

logger = get_logger(__name__)

PARTITION_ALPHA = 0.99


def partition_state(
    h: UniformHypergraph,
    method: Union[SupportedOrdering, str] = SupportedOrdering.MLPPR,
    alpha: float = PARTITION_ALPHA,
    v: Optional[ArrayLike] = None,
    eig_tol: float = EIG_TOL,
    eig_max_iter: int = EIG_MAX_ITER,
    seed: int = 0,
    threads: int = 1,
) -> PartitionState:
    """
    Spectral quantities of a PageRank-based ordering.

    With "mlppr" the latent adjacency matrix is `P_bar x_3 y` for the multi-linear
    pseudo-PageRank solution `y`. With "mpr" it is the 3-mode product of the
    dangling-corrected tensor with the multi-linear PageRank solution. With "gpr" it
    is the clique expansion of the hypergraph, whose PageRank seeds the stationary
    distribution.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph, 3-uniform for the tensor methods.
    method : SupportedOrdering or str, optional
        "mlppr", "mpr" or "gpr", by default "mlppr".
    alpha : float, optional
        Damping probability, by default 0.99.
    v : ArrayLike, optional
        Stochastic vector, by default uniform.
    eig_tol : float, optional
        Eigen-iteration tolerance, by default 1e-10.
    eig_max_iter : int, optional
        Maximum eigen-iterations, by default 1e5.
    seed : int, optional
        Seed of the eigenvector start, by default 0.
    threads : int, optional
        Contraction threads of the PageRank solve, by default 1.

    Returns
    -------
    PartitionState
        Latent matrix, chain, stationary distribution and eigenvector.

    Raises
    ------
    ValueError
        If a tensor method is used with `k != 3` or `method` is "random".
    """
    method = SupportedOrdering(method)
    v = uniform(h.n) if v is None else check_stochastic(v, h.n)

    if method == SupportedOrdering.RANDOM:
        raise ValueError("The random ordering has no spectral state.")

    if method == SupportedOrdering.GPR:
        graph = h.clique_expansion()
        report = solve_graph_pseudo_pagerank(graph, alpha, v, tol_step=1e-14)
        pi0 = report.y / report.y.sum()
        return spectral_state(
            graph, alpha, v, tol=eig_tol, max_iter=eig_max_iter, seed=seed, pi0=pi0
        )

    if h.k != 3:
        raise ValueError(
            f"Tensor-based bipartition requires a 3-uniform hypergraph (got k={h.k})."
        )

    if method == SupportedOrdering.MLPPR:
        problem = PageRankProblem.from_hypergraph(h, alpha, v)
        report = solve_mlppr(problem, threads=threads)
        a_hat = problem.p_bar.contract_to_matrix(report.y)
    else:
        problem = PageRankProblem.from_hypergraph(h, alpha, v, model=SupportedModel.MPR)
        report = solve_mpr(problem, threads=threads)
        a_hat = problem.operator.contract_to_matrix(report.y)

    return spectral_state(
        a_hat, alpha, v, tol=eig_tol, max_iter=eig_max_iter, seed=seed
    )


def order_vertices(
    h: UniformHypergraph,
    method: Union[SupportedOrdering, str] = SupportedOrdering.MLPPR,
    alpha: float = PARTITION_ALPHA,
    v: Optional[ArrayLike] = None,
    seed: int = 0,
    eig_tol: float = EIG_TOL,
    eig_max_iter: int = EIG_MAX_ITER,
    threads: int = 1,
) -> NDArray:
    """
    Vertex ordering used by the sweep cut.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.
    method : SupportedOrdering or str, optional
        "mlppr", "mpr", "gpr" or "random", by default "mlppr".
    alpha : float, optional
        Damping probability, by default 0.99.
    v : ArrayLike, optional
        Stochastic vector, by default uniform.
    seed : int, optional
        Seed of the random ordering or of the eigenvector start, by default 0.
    eig_tol : float, optional
        Eigen-iteration tolerance, by default 1e-10.
    eig_max_iter : int, optional
        Maximum eigen-iterations, by default 1e5.
    threads : int, optional
        Contraction threads of the PageRank solve, by default 1.

    Returns
    -------
    NDArray
        Vertex permutation.
    """
    method = SupportedOrdering(method)
    if method == SupportedOrdering.RANDOM:
        return np.random.default_rng(seed).permutation(h.n)

    state = partition_state(
        h,
        method,
        alpha=alpha,
        v=v,
        eig_tol=eig_tol,
        eig_max_iter=eig_max_iter,
        seed=seed,
        threads=threads,
    )
    return state.order


def bipartition(
    h: UniformHypergraph,
    alpha: float = PARTITION_ALPHA,
    v: Optional[ArrayLike] = None,
    method: Union[SupportedOrdering, str] = SupportedOrdering.MLPPR,
    seed: int = 0,
    eig_tol: float = EIG_TOL,
    eig_max_iter: int = EIG_MAX_ITER,
    threads: int = 1,
) -> SweepCut:
    """
    Split a 3-uniform hypergraph in two with a PageRank-based sweep cut.

    The multi-linear pseudo-PageRank solution defines a latent directed graph whose
    symmetrized random walk provides the vertex ordering; the best prefix under the
    normalized-cut heuristic is returned.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.
    alpha : float, optional
        Damping probability, by default 0.99.
    v : ArrayLike, optional
        Stochastic vector, by default uniform.
    method : SupportedOrdering or str, optional
        Ordering method, by default "mlppr".
    seed : int, optional
        Seed of the eigenvector start, by default 0.
    eig_tol : float, optional
        Eigen-iteration tolerance, by default 1e-10.
    eig_max_iter : int, optional
        Maximum eigen-iterations, by default 1e5.
    threads : int, optional
        Contraction threads of the PageRank solve, by default 1.

    Returns
    -------
    SweepCut
        Ordering, `h` curve and optimal split.
    """
    if h.n < 2:
        return sweep_cut(h, np.arange(h.n))
    order = order_vertices(
        h,
        method,
        alpha=alpha,
        v=v,
        seed=seed,
        eig_tol=eig_tol,
        eig_max_iter=eig_max_iter,
        threads=threads,
    )
    return sweep_cut(h, order)


def h_curves(
    h: UniformHypergraph,
    methods: Sequence[Union[SupportedOrdering, str]] = (
        SupportedOrdering.MLPPR,
        SupportedOrdering.MPR,
        SupportedOrdering.GPR,
        SupportedOrdering.RANDOM,
    ),
    alpha: float = PARTITION_ALPHA,
    seed: int = 0,
    threads: int = 1,
) -> dict[str, SweepCut]:
    """
    Sweep cut of every ordering method on the same hypergraph.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.
    methods : Sequence of SupportedOrdering or str, optional
        Ordering methods, by default all four.
    alpha : float, optional
        Damping probability, by default 0.99.
    seed : int, optional
        Seed, by default 0.
    threads : int, optional
        Contraction threads of the PageRank solve, by default 1.

    Returns
    -------
    dict of {str: SweepCut}
        Sweep cut per method name.
    """
    curves = {}
    for method in methods:
        name = SupportedOrdering(method).value
        curves[name] = bipartition(
            h, alpha=alpha, method=name, seed=seed, threads=threads
        )
        logger.info(
            f"{name}: min h = {curves[name].value:.6g} at i = {curves[name].i_star}."
        )
    return curves
