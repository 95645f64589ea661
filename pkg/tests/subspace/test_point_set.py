import numpy as np
import pytest

from hyperrank.subspace import (
    OUTLIER,
    PointSet,
    bounding_box,
    generate_instance,
    line_fit_cost,
)


def test_point_set():
    ps = PointSet([[0, 0], [1, 1], [2, 2]], [0, 1, OUTLIER])

    assert ps.n == 3
    np.testing.assert_array_equal(ps.clusters, [0, 1])
    np.testing.assert_array_equal(ps.outliers, [False, False, True])


@pytest.mark.parametrize(
    "points, labels",
    [
        ([0, 1, 2], [0, 0, 0]),
        ([[0, 0], [1, 1]], [0]),
        ([[0, np.nan], [1, 1]], [0, 0]),
        ([[0, 0], [1, 1]], [0, -2]),
    ],
)
def test_invalid_point_set(points, labels):
    with pytest.raises(ValueError):
        PointSet(points, labels)


@pytest.mark.parametrize("n, outliers", [(20, 4), (100, 20), (103, 23)])
def test_instance_sizes(n, outliers):
    ps = generate_instance(n, seed=1)

    assert ps.n == n
    assert ps.outliers.sum() == outliers
    for label in range(4):
        assert np.sum(ps.labels == label) == n // 5


def test_instance_is_deterministic():
    first = generate_instance(50, seed=3)
    second = generate_instance(50, seed=3)
    other = generate_instance(50, seed=4)

    np.testing.assert_array_equal(first.points, second.points)
    assert not np.array_equal(first.points, other.points)


def test_noise_free_clusters_are_collinear():
    ps = generate_instance(100, seed=0, noise_scale=0.0)
    low, high = bounding_box()

    for label in range(4):
        cost, _, _ = line_fit_cost(ps.points[ps.labels == label])
        assert cost == pytest.approx(0.0, abs=1e-9)
    assert np.all(ps.points >= low - 1e-12)
    assert np.all(ps.points <= high + 1e-12)


@pytest.mark.parametrize("n, noise_scale", [(19, 0.5), (100, -1.0)])
def test_invalid_instance(n, noise_scale):
    with pytest.raises(ValueError):
        generate_instance(n, noise_scale=noise_scale)
