"""
Norm-controlled perturbations of stochastic vectors.

A perturbation `d` of a stochastic vector `u` keeps `u + d` stochastic and has a
prescribed 1-norm `sigma`. Writing `d = s_plus - s_minus`, the closest such `d` to a
random direction `b` solves the quadratic program

    min ||s_plus - s_minus - b||^2
    s.t. sum(s_plus) = sum(s_minus) = sigma / 2, 0 <= s_minus <= u, s_plus >= 0,

whose solution with disjoint supports is a pair of (capped) simplex projections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from hyperrank.utils import check_stochastic, get_logger

logger = get_logger(__name__)

MAX_DRAWS = 1_000


def _excess(sorted_values: NDArray, suffix_sums: NDArray, tau: NDArray) -> NDArray:
    # sum over a_i > tau of (a_i - tau)
    index = np.searchsorted(sorted_values, tau, side="right")
    count = sorted_values.shape[0] - index
    return suffix_sums[index] - count * tau


def project_capped_simplex(
    x: ArrayLike, total: float, caps: Optional[ArrayLike] = None
) -> tuple[NDArray, float]:
    """
    Euclidean projection onto `{y : 0 <= y <= caps, sum(y) = total}`.

    The projection is `clip(x - tau, 0, caps)` for the threshold `tau` solving the sum
    constraint. The sum is piecewise linear in `tau` with breakpoints at `x` and
    `x - caps`, which are swept in sorted order.

    Parameters
    ----------
    x : ArrayLike
        Point to project.
    total : float
        Nonnegative target sum.
    caps : ArrayLike, optional
        Nonnegative upper bounds, by default none.

    Returns
    -------
    tuple of (NDArray, float)
        Projection and threshold `tau`.

    Raises
    ------
    ValueError
        If `total` is negative or exceeds the sum of the caps.

    Examples
    --------
    >>> from hyperrank.perturb import project_capped_simplex
    >>> y, tau = project_capped_simplex([0.5, 0.2, -1.0], 1.0)
    >>> y.round(6).tolist(), round(tau, 6)
    ([0.65, 0.35, 0.0], -0.15)
    """
    x = np.asarray(x, dtype=np.float64)
    if total < 0:
        raise ValueError(f"Projection total must be nonnegative (got {total}).")
    if caps is not None:
        caps = np.asarray(caps, dtype=np.float64)
        if total > caps.sum():
            raise ValueError(
                f"Projection total {total} exceeds the sum of the caps {caps.sum()}."
            )

    upper = np.sort(x)
    upper_sums = np.append(np.cumsum(upper[::-1])[::-1], 0.0)
    breakpoints = upper
    if caps is not None:
        lower = np.sort(x - caps)
        lower_sums = np.append(np.cumsum(lower[::-1])[::-1], 0.0)
        breakpoints = np.union1d(upper, lower)

    def sums(tau: NDArray) -> NDArray:
        value = _excess(upper, upper_sums, tau)
        if caps is not None:
            value = value - _excess(lower, lower_sums, tau)
        return value

    values = sums(breakpoints)
    below = np.flatnonzero(values <= total)
    first = int(below[0])

    if first == 0:
        if caps is not None or values[0] == total:
            tau = float(breakpoints[0])
        else:
            # left of every breakpoint all coordinates are active
            tau = float(breakpoints[0] - (total - values[0]) / x.shape[0])
    else:
        left, right = breakpoints[first - 1], breakpoints[first]
        drop = values[first - 1] - values[first]
        tau = float(left + (values[first - 1] - total) * (right - left) / drop)

    y = np.maximum(x - tau, 0.0)
    if caps is not None:
        y = np.minimum(y, caps)
    return y, tau


@dataclass(frozen=True)
class SimplexPerturbation:
    """
    Solution of the perturbation program for one direction.

    Attributes
    ----------
    delta : NDArray
        Perturbation `s_plus - s_minus`.
    tau_plus : float
        Threshold of the positive part.
    tau_minus : float
        Threshold of the negative part.
    """

    delta: NDArray
    tau_plus: float
    tau_minus: float

    @property
    def disjoint(self) -> bool:
        """Whether the positive and negative parts have disjoint supports.

        Returns
        -------
        bool
            True when `tau_plus + tau_minus >= 0`.
        """
        return self.tau_plus + self.tau_minus >= 0

    def stationarity(self, u: ArrayLike, b: ArrayLike) -> float:
        """
        Largest violation of the optimality conditions.

        With shift `c = (tau_minus - tau_plus) / 2` and threshold
        `t = (tau_plus + tau_minus) / 2`, every coordinate must satisfy
        `d - b - c in -t * sign(d) + normal cone of d >= -u`.

        Parameters
        ----------
        u : ArrayLike
            Stochastic vector being perturbed.
        b : ArrayLike
            Direction.

        Returns
        -------
        float
            Residual, zero at an exact solution.
        """
        u = np.asarray(u, dtype=np.float64)
        d = self.delta
        shift = (self.tau_minus - self.tau_plus) / 2
        threshold = (self.tau_plus + self.tau_minus) / 2
        r = d - np.asarray(b, dtype=np.float64) - shift

        scale = max(1.0, float(np.abs(d).max(initial=0.0)))
        eps = 1e-12 * scale
        positive = d > eps
        active = d <= -u + eps
        negative = (d < -eps) & ~active
        zero = ~positive & ~negative & ~active

        residual = np.zeros_like(d)
        residual[positive] = np.abs(r[positive] + threshold)
        residual[negative] = np.abs(r[negative] - threshold)
        # lower bound active: multiplier r - t * sign(d) must be nonnegative
        at_bound = active & (d < -eps)
        residual[at_bound] = np.maximum(0.0, threshold - r[at_bound])
        pinned = active & ~at_bound
        residual[pinned] = np.maximum(0.0, -r[pinned] - threshold)
        residual[zero] = np.maximum(0.0, np.abs(r[zero]) - threshold)
        return float(residual.max(initial=0.0))


def project_perturbation(
    u: ArrayLike, sigma: float, b: ArrayLike
) -> SimplexPerturbation:
    """
    Closest admissible perturbation of `u` to the direction `b`.

    Parameters
    ----------
    u : ArrayLike
        Stochastic vector.
    sigma : float
        Target 1-norm in [0, 2).
    b : ArrayLike
        Direction.

    Returns
    -------
    SimplexPerturbation
        Program solution. When `disjoint` is False the two parts overlap and the
        1-norm of `delta` falls short of `sigma`.
    """
    u = np.asarray(u, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    plus, tau_plus = project_capped_simplex(b, sigma / 2)
    minus, tau_minus = project_capped_simplex(-b, sigma / 2, caps=u)
    return SimplexPerturbation(
        delta=plus - minus, tau_plus=tau_plus, tau_minus=tau_minus
    )


def perturb_stochastic(
    u: ArrayLike,
    sigma: float,
    seed: Optional[Union[int, np.random.Generator]] = None,
) -> NDArray:
    """
    Random perturbation `d` with `||d||_1 = sigma`, `sum(d) = 0` and `u + d >= 0`.

    A standard normal direction is projected on the admissible set; directions whose
    projection would need overlapping positive and negative parts are redrawn.

    Parameters
    ----------
    u : ArrayLike
        Stochastic vector of length at least 2.
    sigma : float
        Perturbation magnitude in [0, 2).
    seed : int or numpy.random.Generator, optional
        Seed or generator, by default None.

    Returns
    -------
    NDArray
        Perturbation.

    Raises
    ------
    ValueError
        If `u` is not stochastic or has a single entry, if `sigma` is outside
        [0, 2), or if no admissible direction was drawn.

    Examples
    --------
    >>> import numpy as np
    >>> from hyperrank.perturb import perturb_stochastic
    >>> u = np.full(4, 0.25)
    >>> d = perturb_stochastic(u, 0.1, seed=3)
    >>> round(float(np.abs(d).sum()), 8), abs(float(d.sum())) < 1e-12
    (0.1, True)
    """
    u = np.asarray(u, dtype=np.float64)
    check_stochastic(u, u.shape[0])
    if u.shape[0] < 2:
        raise ValueError("Cannot perturb a stochastic vector of length 1.")
    if not 0 <= sigma < 2:
        raise ValueError(
            f"Perturbation magnitude must be in [0, 2) to keep u + d stochastic "
            f"(got {sigma})."
        )
    if sigma == 0:
        return np.zeros_like(u)

    rng = np.random.default_rng(seed)
    for _ in range(MAX_DRAWS):
        solution = project_perturbation(u, sigma, rng.standard_normal(u.shape[0]))
        if solution.disjoint:
            return solution.delta

    raise ValueError(
        f"No admissible perturbation of magnitude {sigma} found in {MAX_DRAWS} draws."
    )
