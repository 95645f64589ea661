import numpy as np
import pytest

from hyperrank.file_io.read import read_points
from hyperrank.file_io.write import write_points
from hyperrank.subspace import PointSet, generate_instance


def test_write_points(tmp_path):
    ps = generate_instance(40, seed=2)
    path = tmp_path / "points.csv"
    write_points(path, ps)

    assert path.read_text().splitlines()[0] == "x,y,label"
    loaded = read_points(path)
    np.testing.assert_array_equal(loaded.points, ps.points)
    np.testing.assert_array_equal(loaded.labels, ps.labels)


def test_wrong_extension(tmp_path):
    ps = PointSet([[0, 0], [1, 1]], [0, 0])
    with pytest.raises(ValueError):
        write_points(tmp_path / "points.txt", ps)


def test_not_planar(tmp_path):
    ps = PointSet([[0, 0, 0], [1, 1, 1]], [0, 0])
    with pytest.raises(ValueError):
        write_points(tmp_path / "points.csv", ps)
