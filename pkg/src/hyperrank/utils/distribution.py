"""Probability vector helpers."""

import numpy as np
from numpy.typing import ArrayLike, NDArray

STOCHASTIC_ATOL = 1e-12


def check_stochastic(v: ArrayLike, n: int, atol: float = STOCHASTIC_ATOL) -> NDArray:
    """
    Validate a stochastic vector and return it as a float array.

    Parameters
    ----------
    v : ArrayLike
        Candidate distribution.
    n : int
        Expected length.
    atol : float, optional
        Tolerance on the sum, by default 1e-12.

    Returns
    -------
    NDArray
        The vector as float64.

    Raises
    ------
    ValueError
        If `v` has the wrong length, has negative or non finite entries, or does not
        sum to 1.

    Examples
    --------
    >>> from hyperrank.utils.distribution import check_stochastic
    >>> check_stochastic([0.5, 0.5], 2).tolist()
    [0.5, 0.5]
    """
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (n,):
        raise ValueError(f"Distribution must have length {n} (got shape {v.shape}).")
    if not np.all(np.isfinite(v)) or np.any(v < 0):
        raise ValueError("Distribution entries must be finite and nonnegative.")
    total = v.sum()
    if abs(total - 1.0) > atol:
        raise ValueError(f"Distribution must sum to 1 (got {total:.15g}).")
    return v


def uniform(n: int) -> NDArray:
    """
    Uniform distribution `e / n`.

    Parameters
    ----------
    n : int
        Length.

    Returns
    -------
    NDArray
        Uniform vector.
    """
    return np.full(n, 1.0 / n)
