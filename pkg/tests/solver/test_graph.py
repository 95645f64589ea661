import numpy as np
import pytest
from scipy import sparse

from hyperrank.solver import graph_problem, solve_graph_pseudo_pagerank


def random_adjacency(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    adjacency = (rng.random((n, n)) < 0.3) * rng.uniform(0.5, 2.0, (n, n))
    np.fill_diagonal(adjacency, 0)
    # last vertex has no out-arcs
    adjacency[:, -1] = 0
    return adjacency


def dense_pseudo_pagerank(adjacency: np.ndarray, alpha: float, v: np.ndarray):
    out = adjacency.sum(axis=0)
    inverse = np.divide(1.0, out, out=np.zeros_like(out), where=out > 0)
    matrix = np.eye(len(v)) - alpha * adjacency * inverse
    return np.linalg.solve(matrix, v)


@pytest.mark.parametrize("seed", range(50))
@pytest.mark.parametrize("alpha", [0.5, 0.85])
def test_matches_linear_system(seed, alpha):
    adjacency = random_adjacency(20, seed)
    v = np.random.default_rng(seed).dirichlet(np.ones(20))

    report = solve_graph_pseudo_pagerank(
        sparse.csr_matrix(adjacency), alpha, v, tol_step=1e-13, tol_eq=1e-14
    )
    expected = dense_pseudo_pagerank(adjacency, alpha, v)

    assert report.converged
    assert np.max(np.abs(report.y - expected)) <= 1e-8


def test_graph_problem():
    adjacency = random_adjacency(6, 0)
    problem = graph_problem(sparse.coo_matrix(adjacency), 0.5)

    assert problem.k == 2
    assert problem.p_bar.is_substochastic()
    np.testing.assert_allclose(problem.v, np.full(6, 1 / 6))


def test_contraction_constant_is_alpha():
    report = solve_graph_pseudo_pagerank(sparse.csr_matrix(random_adjacency(5, 1)), 0.6)
    assert report.varsigma == pytest.approx(0.6)
