import numpy as np
import pytest

from hyperrank.config import SolverConfig
from hyperrank.hypergraph import ImplicitCorrection
from hyperrank.solver import PageRankProblem, SolveReport, solve
from hyperrank.tensor import SparseKTensor


def test_default_vector(toy_hypergraph):
    problem = PageRankProblem.from_hypergraph(toy_hypergraph, alpha=0.5)

    assert problem.n == 9
    assert problem.k == 3
    np.testing.assert_allclose(problem.v, np.full(9, 1 / 9))
    assert isinstance(problem.operator, ImplicitCorrection)


@pytest.mark.parametrize("alpha", [-0.1, 1.0])
def test_invalid_alpha(toy_hypergraph, alpha):
    with pytest.raises(ValueError):
        PageRankProblem.from_hypergraph(toy_hypergraph, alpha=alpha)


def test_invalid_vector(toy_hypergraph):
    with pytest.raises(ValueError):
        PageRankProblem.from_hypergraph(toy_hypergraph, alpha=0.5, v=np.ones(9))
    with pytest.raises(ValueError):
        PageRankProblem.from_hypergraph(toy_hypergraph, alpha=0.5, v=np.ones(3) / 3)


def test_not_substochastic():
    p_bar = SparseKTensor(2, 2, [[0, 0], [1, 0]], [1.0, 1.0])
    with pytest.raises(ValueError):
        PageRankProblem(p_bar, alpha=0.5)


def test_invalid_model(toy_hypergraph):
    with pytest.raises(ValueError):
        PageRankProblem.from_hypergraph(toy_hypergraph, alpha=0.5, model="gpr")


def test_with_data(toy_problem):
    v = np.full(9, 1 / 9)
    copy = toy_problem.with_data(v=v)

    assert copy.p_bar is toy_problem.p_bar
    assert copy.alpha == toy_problem.alpha
    np.testing.assert_allclose(copy.v, v)

    zeros = SparseKTensor.zeros(9, 3)
    assert toy_problem.with_data(p_bar=zeros).p_bar is zeros


@pytest.mark.parametrize("model", ["mlppr", "mpr"])
def test_solve_with_config(toy_hypergraph, toy_v, model):
    problem = PageRankProblem.from_hypergraph(
        toy_hypergraph, alpha=0.2, v=toy_v, model=model
    )
    report = solve(problem, SolverConfig(alpha=0.2, threads=1))

    assert isinstance(report, SolveReport)
    assert report.converged
    assert report.model.value == model


def test_solve_default_config(toy_problem):
    assert solve(toy_problem).converged


def test_report_summary(toy_problem):
    summary = solve(toy_problem).summary()

    assert set(summary) == {
        "model",
        "converged",
        "iterations",
        "residual_step",
        "residual_eq",
        "varsigma",
        "unique_by_contraction",
        "unique_by_corollary",
        "work",
        "sum_y",
    }
    assert summary["model"] == "mlppr"
    assert isinstance(summary["converged"], bool)
