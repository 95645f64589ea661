"""Least-squares straight-line fitting."""

import numpy as np
from numpy.typing import ArrayLike, NDArray


def line_fit_cost(points: ArrayLike) -> tuple[float, NDArray, NDArray]:
    """
    Least-squares error of fitting a straight line through points.

    With `U` the matrix of centered points, the best line passes through the mean
    along the top eigenvector `v` of `U U^T`, and the error is
    `trace(U^T U) - v^T U U^T v`, the sum of the remaining eigenvalues. Identical
    points have zero error and an arbitrary unit direction.

    Parameters
    ----------
    points : ArrayLike
        Coordinates of shape (k, d), k and d at least 2.

    Returns
    -------
    tuple of (float, NDArray, NDArray)
        Error, center and unit direction.

    Raises
    ------
    ValueError
        If fewer than two points or coordinates are given.

    Examples
    --------
    >>> from hyperrank.subspace import line_fit_cost
    >>> cost, center, direction = line_fit_cost([[0, 0], [1, 1], [2, 2]])
    >>> round(cost, 10)
    0.0
    >>> center.tolist()
    [1.0, 1.0]
    """
    points = np.asarray(points, dtype=np.float64)
    if points.ndim != 2 or points.shape[0] < 2 or points.shape[1] < 2:
        raise ValueError("Line fitting needs at least two points of dimension >= 2.")

    center = points.mean(axis=0)
    u = (points - center).T
    scatter = u @ u.T
    _, vectors = np.linalg.eigh(scatter)
    direction = vectors[:, -1]
    cost = float(np.trace(scatter) - direction @ scatter @ direction)
    return max(cost, 0.0), center, direction


def line_fit_costs(groups: ArrayLike) -> NDArray:
    """
    Line-fitting errors of many point groups at once.

    Parameters
    ----------
    groups : ArrayLike
        Coordinates of shape (t, k, d).

    Returns
    -------
    NDArray
        Errors of shape (t,), the sums of all but the largest eigenvalue of each
        scatter matrix.
    """
    groups = np.asarray(groups, dtype=np.float64)
    centered = groups - groups.mean(axis=1, keepdims=True)
    scatter = np.einsum("tki,tkj->tij", centered, centered)
    values = np.linalg.eigvalsh(scatter)
    return np.clip(values[:, :-1].sum(axis=1), 0.0, None)
