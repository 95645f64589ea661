import numpy as np
import pytest

from hyperrank.file_io.read import read_points


def test_read_points(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("x,y,label\n0.5,1.5,0\n-2.0,3.0,-1\n1e-3,2,3\n")

    ps = read_points(path)

    assert ps.n == 3
    np.testing.assert_allclose(ps.points, [[0.5, 1.5], [-2.0, 3.0], [1e-3, 2.0]])
    np.testing.assert_array_equal(ps.labels, [0, -1, 3])


@pytest.mark.parametrize(
    "content",
    [
        "x,y\n0,1\n",
        "a,b,label\n0,1,0\n",
        "x,y,label\n0,1,0.5\n",
        "x,y,label\n0,one,0\n",
        "x,y,label\n0,1,-3\n",
    ],
)
def test_malformed(tmp_path, content):
    path = tmp_path / "points.csv"
    path.write_text(content)
    with pytest.raises(ValueError):
        read_points(path)


def test_wrong_extension(tmp_path):
    path = tmp_path / "points.txt"
    path.write_text("x,y,label\n0,1,0\n")
    with pytest.raises(ValueError):
        read_points(path)
