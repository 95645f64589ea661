import numpy as np
import pytest

from hyperrank.hypergraph import dangling_fibers
from hyperrank.perturb import perturb_tensor, unfolded_distance
from hyperrank.tensor import SparseKTensor


@pytest.mark.parametrize("sigma_total", [1e-3, 0.1, 1.0])
def test_perturb_tensor(toy_problem, sigma_total):
    p_bar = toy_problem.p_bar
    perturbed = perturb_tensor(p_bar, sigma_total, seed=0)

    assert not perturbed.semi_symmetric
    assert perturbed.is_substochastic()
    assert unfolded_distance(perturbed, p_bar) == pytest.approx(sigma_total)

    _, sums = perturbed.fiber_sums()
    np.testing.assert_allclose(sums, 1.0)
    # dangling fibers are left untouched
    assert dangling_fibers(perturbed).count == dangling_fibers(p_bar).count


def test_perturb_tensor_is_seeded(toy_problem):
    first = perturb_tensor(toy_problem.p_bar, 0.1, seed=3)
    second = perturb_tensor(toy_problem.p_bar, 0.1, seed=3)
    assert first.to_dict() == second.to_dict()


def test_zero_budget(toy_problem):
    assert perturb_tensor(toy_problem.p_bar, 0.0) is toy_problem.p_bar


def test_invalid_budget(toy_problem):
    with pytest.raises(ValueError):
        perturb_tensor(toy_problem.p_bar, -0.1)
    with pytest.raises(ValueError):
        perturb_tensor(SparseKTensor.zeros(3, 3), 0.1)


def test_unfolded_distance(toy_problem):
    p_bar = toy_problem.p_bar

    assert unfolded_distance(p_bar, p_bar.expanded()) == pytest.approx(0.0)
    assert unfolded_distance(p_bar, SparseKTensor.zeros(9, 3)) == pytest.approx(
        dangling_fibers(p_bar).nonzero_count
    )
    with pytest.raises(ValueError):
        unfolded_distance(p_bar, SparseKTensor.zeros(9, 4))
