import numpy as np
import pytest

from hyperrank.solver import (
    contraction_constant,
    equation_residual,
    feasible_bound,
    step_residual,
    unique_by_corollary,
)


@pytest.mark.parametrize(
    "k, alpha, expected",
    [(2, 0.85, 0.85), (3, 0.2, 0.6708), (3, 0.0, 0.0), (4, 0.1, 0.5 / 0.9 ** (2 / 3))],
)
def test_contraction_constant(k, alpha, expected):
    assert contraction_constant(k, alpha) == pytest.approx(expected, abs=1e-4)


@pytest.mark.parametrize("k, alpha", [(1, 0.5), (3, 1.0), (3, -0.1)])
def test_contraction_constant_errors(k, alpha):
    with pytest.raises(ValueError):
        contraction_constant(k, alpha)


def test_unique_by_corollary():
    assert unique_by_corollary(3, 0.49)
    assert not unique_by_corollary(3, 0.5)
    assert unique_by_corollary(2, 0.99)


def test_feasible_bound():
    assert feasible_bound(2, 0.5) == pytest.approx(2.0)
    assert feasible_bound(3, 0.75) == pytest.approx(2.0)


def test_step_residual():
    residual = step_residual(np.array([0.5, 0.5]), np.array([0.5, 0.4]))
    assert residual == pytest.approx(0.1)
    assert step_residual(np.zeros(2), np.ones(2)) == np.inf


def test_equation_residual(toy_problem):
    assert equation_residual(toy_problem, np.zeros(9)) == np.inf
    assert equation_residual(toy_problem, toy_problem.v) > 0
