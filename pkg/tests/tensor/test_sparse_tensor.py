import itertools
import math

import numpy as np
import pytest

from hyperrank.tensor import SparseKTensor, random_semi_symmetric, tail_multiplicity


def test_tail_multiplicity():
    tails = np.array([[0, 1, 2], [0, 0, 1], [2, 2, 2], [1, 3, 3]])
    np.testing.assert_array_equal(tail_multiplicity(tails), [6, 3, 1, 3])


@pytest.mark.parametrize(
    "n, k, indices, values",
    [
        (3, 1, [[0]], [1.0]),
        (3, 2, [[0, 3]], [1.0]),
        (3, 2, [[0, 1]], [1.0, 2.0]),
        (3, 2, [[0, 1]], [0.0]),
        (3, 2, [[0, 1]], [np.inf]),
        (3, 2, [[0, 1], [0, 1]], [1.0, 2.0]),
    ],
)
def test_invalid_tensor(n, k, indices, values):
    with pytest.raises(ValueError):
        SparseKTensor(n, k, indices, values)


def test_unsorted_canonical_tail():
    with pytest.raises(ValueError):
        SparseKTensor(3, 3, [[0, 2, 1]], [1.0], semi_symmetric=True)


def test_storage_is_read_only():
    p = SparseKTensor(3, 2, [[1, 0], [0, 1]], [2.0, 1.0])
    # stored lexicographically
    np.testing.assert_array_equal(p.indices, [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        p.values[0] = 5.0


def test_from_dict_semi_symmetric():
    entries = {(0, 1, 2): 0.5, (0, 2, 1): 0.5, (1, 1, 1): 2.0}
    p = SparseKTensor.from_dict(3, 3, entries, semi_symmetric=True)
    assert p.nnz == 2
    assert p.nnz_expanded == 3
    assert p.to_dict() == entries


def test_from_dict_not_semi_symmetric():
    with pytest.raises(ValueError):
        SparseKTensor.from_dict(3, 3, {(0, 1, 2): 0.5}, semi_symmetric=True)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_expanded_matches_dense(k):
    p = random_semi_symmetric(4, k, density=0.4, seed=k)
    dense = p.to_dense()

    # every permutation of the tail holds the same value
    for index in itertools.product(range(4), repeat=k):
        for perm in itertools.permutations(index[1:]):
            assert dense[index] == dense[(index[0], *perm)]

    assert p.expanded().nnz == np.count_nonzero(dense)
    assert p.nnz_expanded == np.count_nonzero(dense)


def test_zeros():
    p = SparseKTensor.zeros(5, 3)
    assert p.nnz == 0
    np.testing.assert_array_equal(p.apply(np.ones(5)), np.zeros(5))


def test_with_values_drops_zeros():
    p = SparseKTensor(3, 2, [[0, 1], [1, 0]], [1.0, 2.0])
    q = p.with_values(np.array([0.0, 3.0]))
    assert q.to_dict() == {(1, 0): 3.0}


def test_substochastic():
    p = SparseKTensor(2, 2, [[0, 0], [1, 0], [1, 1]], [0.5, 0.5, 1.0])
    assert p.is_substochastic()
    q = SparseKTensor(2, 2, [[0, 0], [1, 0]], [0.7, 0.5])
    assert not q.is_substochastic()
    r = SparseKTensor(2, 2, [[0, 0]], [-0.1])
    assert not r.is_substochastic()


def test_fiber_sums_semi_symmetric():
    p = SparseKTensor(3, 3, [[0, 1, 2], [2, 1, 2]], [0.25, 0.5], semi_symmetric=True)
    columns, sums = p.fiber_sums()
    # both entries share the tail (1, 2), column 1 + 2 * 3
    np.testing.assert_array_equal(columns, [7])
    np.testing.assert_allclose(sums, [0.75])


def test_work_per_apply():
    p = random_semi_symmetric(5, 3, density=0.3, seed=1)
    assert p.work_per_apply == p.nnz * 3
    assert p.nnz_expanded <= p.nnz * math.factorial(2)
