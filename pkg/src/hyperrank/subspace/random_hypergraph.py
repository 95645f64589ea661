"""Random 3-uniform hypergraphs of nearly collinear point triples."""

import numpy as np
from numpy.typing import NDArray

from hyperrank.hypergraph import UniformHypergraph
from hyperrank.utils import get_logger

from .line_fit import line_fit_costs
from .point_set import PointSet

logger = get_logger(__name__)


def candidate_triples(n: int, seed: int = 0) -> NDArray:
    """
    One candidate triple per vertex pair, completed by a random third vertex.

    Parameters
    ----------
    n : int
        Number of vertices, at least 3.
    seed : int, optional
        Seed, by default 0.

    Returns
    -------
    NDArray
        Triples `(i, j, r)` of shape (n (n-1) / 2, 3) with `i < j` in row-major pair
        order and `r` distinct from both.

    Raises
    ------
    ValueError
        If `n < 3`.
    """
    if n < 3:
        raise ValueError(f"Candidate triples need at least 3 vertices (got {n}).")

    i, j = np.triu_indices(n, k=1)
    rng = np.random.default_rng(seed)
    third = rng.integers(0, n - 2, size=i.shape[0])
    # skip the pair itself, i < j
    third = third + (third >= i)
    third = third + (third >= j)
    return np.column_stack([i, j, third]).astype(np.int64)


def edge_budget(n: int) -> int:
    """
    Number of candidates kept, `floor(n (n-1) / 40)`.

    Parameters
    ----------
    n : int
        Number of vertices.

    Returns
    -------
    int
        Five percent of the vertex pairs, rounded down.

    Examples
    --------
    >>> from hyperrank.subspace import edge_budget
    >>> edge_budget(100)
    247
    """
    return n * (n - 1) // 40


def score_candidates(ps: PointSet, seed: int = 0) -> tuple[NDArray, NDArray]:
    """
    Candidate triples and their line-fitting errors.

    Parameters
    ----------
    ps : PointSet
        Points.
    seed : int, optional
        Seed of the third-vertex draw, by default 0.

    Returns
    -------
    tuple of NDArray
        Triples of shape (t, 3) and errors of shape (t,).
    """
    triples = candidate_triples(ps.n, seed)
    return triples, line_fit_costs(ps.points[triples])


def build_random_hypergraph(ps: PointSet, seed: int = 0) -> UniformHypergraph:
    """
    Hypergraph of the best-fitting candidate triples.

    The `floor(n (n-1) / 40)` candidates with the smallest line-fitting errors are
    kept, ties resolved by candidate order, and repeated triples are merged after
    selection.

    Parameters
    ----------
    ps : PointSet
        Points, at least 3.
    seed : int, optional
        Seed, by default 0.

    Returns
    -------
    UniformHypergraph
        Undirected 3-uniform hypergraph with unit weights.
    """
    triples, costs = score_candidates(ps, seed)
    budget = edge_budget(ps.n)
    selected = triples[np.argsort(costs, kind="stable")[:budget]]
    edges = np.unique(np.sort(selected, axis=1), axis=0)
    if edges.shape[0] < budget:
        logger.info(
            f"Merged {budget - edges.shape[0]} repeated triples, keeping "
            f"{edges.shape[0]} edges."
        )
    return UniformHypergraph(ps.n, 3, edges)
