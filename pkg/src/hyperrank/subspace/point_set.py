"""Labeled point sets and synthetic line-clustering instances."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

OUTLIER = -1

LINE_ANGLES: tuple[float, ...] = (np.pi / 9, 0.0, -7 * np.pi / 18, -np.pi / 2)
"""Directions of the four planted lines, as angles to the first axis."""

LINE_CENTERS: tuple[tuple[float, float], ...] = (
    (-20.0, 0.0),
    (0.0, 20.0),
    (0.0, -20.0),
    (20.0, 0.0),
)
"""Midpoints of the four planted segments, on a diamond.

No line passes within 8 units of another segment and no three midpoints are close to
collinear.
"""

SEGMENT_HALF_LENGTH = 5.0

NOISE_SCALE = float(np.sqrt(0.5))


class PointSet:
    """
    Points in the plane or in higher dimension, with ground-truth labels.

    Parameters
    ----------
    points : ArrayLike
        Coordinates of shape (n, d), d at least 2.
    labels : ArrayLike
        Cluster id per point, `-1` for outliers.

    Attributes
    ----------
    points : NDArray
        Coordinates.
    labels : NDArray
        Labels.
    """

    def __init__(self, points: ArrayLike, labels: ArrayLike) -> None:
        """
        Constructor.

        Parameters
        ----------
        points : ArrayLike
            Coordinates of shape (n, d).
        labels : ArrayLike
            Cluster id per point, `-1` for outliers.

        Raises
        ------
        ValueError
            If the coordinates are not finite or shapes do not match.
        """
        points = np.asarray(points, dtype=np.float64)
        labels = np.asarray(labels, dtype=np.int64).reshape(-1)
        if points.ndim != 2 or points.shape[1] < 2:
            raise ValueError("Points must be an array of shape (n, d) with d >= 2.")
        if points.shape[0] != labels.shape[0]:
            raise ValueError(
                f"Got {points.shape[0]} points but {labels.shape[0]} labels."
            )
        if not np.all(np.isfinite(points)):
            raise ValueError("Point coordinates must be finite.")
        if np.any(labels < OUTLIER):
            raise ValueError(f"Labels must be cluster ids or {OUTLIER} for outliers.")

        self.points = points
        self.labels = labels

    @property
    def n(self) -> int:
        """Number of points.

        Returns
        -------
        int
            Point count.
        """
        return int(self.points.shape[0])

    @property
    def clusters(self) -> NDArray:
        """Cluster ids present, outliers excluded.

        Returns
        -------
        NDArray
            Sorted cluster ids.
        """
        return np.unique(self.labels[self.labels != OUTLIER])

    @property
    def outliers(self) -> NDArray:
        """Mask of the outliers.

        Returns
        -------
        NDArray
            Boolean mask of shape (n,).
        """
        return self.labels == OUTLIER


@dataclass(frozen=True)
class _Segment:
    center: NDArray
    direction: NDArray


def _segments() -> list[_Segment]:
    return [
        _Segment(np.asarray(center), np.array([np.cos(angle), np.sin(angle)]))
        for center, angle in zip(LINE_CENTERS, LINE_ANGLES)
    ]


def bounding_box() -> tuple[NDArray, NDArray]:
    """
    Axis-aligned box of the four noise-free segments.

    Returns
    -------
    tuple of NDArray
        Lower and upper corners.
    """
    ends = []
    for segment in _segments():
        ends.append(segment.center - SEGMENT_HALF_LENGTH * segment.direction)
        ends.append(segment.center + SEGMENT_HALF_LENGTH * segment.direction)
    stacked = np.stack(ends)
    return stacked.min(axis=0), stacked.max(axis=0)


def generate_instance(
    n: int, seed: int = 0, noise_scale: float = NOISE_SCALE
) -> PointSet:
    """
    Four noisy collinear clusters plus uniform outliers.

    Each cluster holds `n // 5` points drawn uniformly along its segment, and every
    cluster point is shifted by isotropic Gaussian noise of standard deviation
    `noise_scale`. The remaining points are outliers drawn uniformly over the
    bounding box of the segments.

    Parameters
    ----------
    n : int
        Number of points, at least 20.
    seed : int, optional
        Seed, by default 0.
    noise_scale : float, optional
        Noise standard deviation, by default `sqrt(1/2)`.

    Returns
    -------
    PointSet
        Points labeled 0 to 3, outliers labeled -1.

    Raises
    ------
    ValueError
        If `n < 20` or `noise_scale < 0`.

    Examples
    --------
    >>> from hyperrank.subspace import generate_instance
    >>> ps = generate_instance(100, seed=7)
    >>> ps.n, int(ps.outliers.sum())
    (100, 20)
    """
    if n < 20:
        raise ValueError(f"An instance needs at least 20 points (got {n}).")
    if noise_scale < 0:
        raise ValueError(f"Noise scale must be nonnegative (got {noise_scale}).")

    rng = np.random.default_rng(seed)
    per_cluster = n // 5

    points = []
    labels = []
    for label, segment in enumerate(_segments()):
        t = rng.uniform(-SEGMENT_HALF_LENGTH, SEGMENT_HALF_LENGTH, size=per_cluster)
        on_line = segment.center + t[:, None] * segment.direction
        points.append(on_line + noise_scale * rng.standard_normal(on_line.shape))
        labels.append(np.full(per_cluster, label))

    n_outliers = n - 4 * per_cluster
    low, high = bounding_box()
    points.append(rng.uniform(low, high, size=(n_outliers, 2)))
    labels.append(np.full(n_outliers, OUTLIER))

    return PointSet(np.concatenate(points), np.concatenate(labels))
