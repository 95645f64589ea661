from unittest.mock import patch

import numpy as np
import pytest

from hyperrank.hypergraph import (
    ImplicitCorrection,
    RankOneUpdate,
    as_dense,
    contract_corrected,
    dangling_correction,
    explicit_correction,
    transition_tensor,
)
from hyperrank.tensor import SparseKTensor


def brute_force_corrected(p_bar: SparseKTensor, v: np.ndarray) -> np.ndarray:
    """Dense corrected tensor, adding v (1 - s) to every fiber of sum s."""
    dense = p_bar.to_dense()
    sums = dense.sum(axis=0)
    return dense + np.multiply.outer(v, 1 - sums)


@pytest.fixture
def corrected_inputs(random_hypergraph):
    h = random_hypergraph(6, k=3, m=6, seed=2, weighted=True)
    p_bar, _ = transition_tensor(h)
    v = np.random.default_rng(0).dirichlet(np.ones(6))
    # one zero entry in v exercises the support handling
    v[0] = 0.0
    v /= v.sum()
    return p_bar, v


def test_explicit_matches_brute_force(corrected_inputs):
    p_bar, v = corrected_inputs
    corrected = explicit_correction(p_bar, v)
    assert corrected.semi_symmetric
    np.testing.assert_allclose(
        corrected.to_dense(), brute_force_corrected(p_bar, v), atol=1e-14
    )
    _, sums = corrected.fiber_sums()
    np.testing.assert_allclose(sums, 1.0)


def test_explicit_partial_fibers():
    # fiber of tail 1 sums to 0.5, fiber of tail 0 is dangling
    p_bar = SparseKTensor(2, 2, [[0, 1]], [0.5])
    v = np.array([0.25, 0.75])
    corrected = explicit_correction(p_bar, v)
    np.testing.assert_allclose(
        corrected.to_dense(), [[0.25, 0.5 + 0.125], [0.75, 0.375]]
    )


@pytest.mark.parametrize("mode", ["explicit", "implicit"])
def test_apply_corrected(corrected_inputs, mode):
    p_bar, v = corrected_inputs
    operator = dangling_correction(p_bar, v, mode)
    x = np.random.default_rng(1).uniform(0, 1, 6)

    dense = brute_force_corrected(p_bar, v)
    expected = np.einsum("ijk,j,k->i", dense, x, x)
    np.testing.assert_allclose(operator.apply(x), expected, atol=1e-13)


@pytest.mark.parametrize("mode", ["explicit", "implicit"])
def test_contract_corrected(corrected_inputs, mode):
    p_bar, v = corrected_inputs
    operator = dangling_correction(p_bar, v, mode)
    x = np.random.default_rng(2).dirichlet(np.ones(6))

    expected = brute_force_corrected(p_bar, v) @ x
    matrix = contract_corrected(operator, x)
    np.testing.assert_allclose(matrix, expected, atol=1e-13)
    # stochastic input gives a column-stochastic matrix
    np.testing.assert_allclose(matrix.sum(axis=0), 1.0)


def test_implicit_operator(corrected_inputs):
    p_bar, v = corrected_inputs
    operator = dangling_correction(p_bar, v)
    assert isinstance(operator, ImplicitCorrection)
    assert operator.work_per_apply == p_bar.work_per_apply + 18

    x = np.random.default_rng(3).uniform(0, 1, 6)
    linear = operator.contract_to_matrix(x)
    assert isinstance(linear, RankOneUpdate)
    y = np.random.default_rng(4).uniform(0, 1, 6)
    np.testing.assert_allclose(linear.rmatvec(y), linear.toarray().T @ y)


def test_invalid_vector(corrected_inputs):
    p_bar, _ = corrected_inputs
    with pytest.raises(ValueError):
        dangling_correction(p_bar, np.ones(6))


def test_explicit_memory_guard(corrected_inputs):
    p_bar, v = corrected_inputs
    with patch("hyperrank.hypergraph.dangling.get_ram_size", return_value=0.0):
        with pytest.raises(MemoryError):
            explicit_correction(p_bar, v)


def test_as_dense():
    matrix = np.arange(4.0).reshape(2, 2)
    np.testing.assert_array_equal(as_dense(matrix), matrix)
