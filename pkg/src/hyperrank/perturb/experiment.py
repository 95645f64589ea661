"""Sensitivity of multi-linear pseudo-PageRank solutions to data perturbations."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Optional

import numpy as np
from numpy.typing import NDArray

from hyperrank.config import PerturbationConfig, PerturbationSpec
from hyperrank.config.support import SupportedPerturbationTarget
from hyperrank.solver import PageRankProblem, contraction_constant, solve_mlppr
from hyperrank.utils import get_logger, resolve_threads

from .simplex import perturb_stochastic
from .tensor import perturb_tensor, unfolded_distance

logger = get_logger(__name__)

EXPERIMENT_TOL = 1e-13


def perturbation_bound(
    k: int, alpha: float, tensor_norm: float, vector_norm: float
) -> float:
    """
    Upper bound on `||delta y||_1` for perturbed data.

    The bound is `(2k-3) / ((k-1)(1-c)) (alpha / (1-alpha) ||R(delta P)||_1 +
    ||delta v||_1)` with `c` the contraction constant.

    Parameters
    ----------
    k : int
        Tensor order.
    alpha : float
        Damping probability.
    tensor_norm : float
        1-norm of the unfolded tensor perturbation.
    vector_norm : float
        1-norm of the vector perturbation.

    Returns
    -------
    float
        Bound.

    Raises
    ------
    ValueError
        If the contraction constant is not below 1.

    Examples
    --------
    >>> from hyperrank.perturb import perturbation_bound
    >>> round(perturbation_bound(2, 0.5, 0.0, 0.1), 6)
    0.2
    """
    varsigma = contraction_constant(k, alpha)
    if varsigma >= 1:
        raise ValueError(
            f"The perturbation bound needs a contraction constant below 1 "
            f"(got {varsigma:.4f} for k={k}, alpha={alpha})."
        )
    factor = (2 * k - 3) / ((k - 1) * (1 - varsigma))
    return factor * (alpha / (1 - alpha) * tensor_norm + vector_norm)


@dataclass(frozen=True)
class PerturbationRow:
    """
    Aggregated trials of one perturbation setting.

    Attributes
    ----------
    sigma : float
        Perturbation magnitude.
    mode : str
        Perturbed data, "v", "tensor" or "both".
    mean_dy : float
        Mean of `||delta y||_1` over the trials.
    max_dy : float
        Maximum of `||delta y||_1` over the trials.
    bound : float
        Largest theoretical bound over the trials.
    violations : int
        Number of trials exceeding their bound.
    """

    sigma: float
    mode: str
    mean_dy: float
    max_dy: float
    bound: float
    violations: int = 0

    def as_dict(self) -> dict[str, Any]:
        """Row as a dictionary.

        Returns
        -------
        dict
            Field values.
        """
        return asdict(self)


def _solve(problem: PageRankProblem, threads: int = 1) -> NDArray:
    report = solve_mlppr(
        problem, tol_step=EXPERIMENT_TOL, tol_eq=EXPERIMENT_TOL, threads=threads
    )
    return report.y


def run_trials(
    problem: PageRankProblem,
    spec: PerturbationSpec,
    y_star: Optional[NDArray] = None,
    threads: int = 1,
) -> PerturbationRow:
    """
    Re-solve a problem under random perturbations of one setting.

    Trial `t` draws its perturbations from the seed sequence `(spec.seed, t)`.

    Parameters
    ----------
    problem : PageRankProblem
        Unperturbed problem.
    spec : PerturbationSpec
        Magnitude, target, number of trials and seed.
    y_star : NDArray, optional
        Unperturbed solution, computed when not given.
    threads : int, optional
        Contraction threads of every solve, by default 1.

    Returns
    -------
    PerturbationRow
        Aggregated trials.
    """
    target = SupportedPerturbationTarget(spec.target)
    y_star = _solve(problem, threads) if y_star is None else y_star
    perturb_v = target in (
        SupportedPerturbationTarget.V,
        SupportedPerturbationTarget.BOTH,
    )
    perturb_p = target in (
        SupportedPerturbationTarget.TENSOR,
        SupportedPerturbationTarget.BOTH,
    )

    changes = np.zeros(spec.trials)
    bounds = np.zeros(spec.trials)
    for trial in range(spec.trials):
        rng = np.random.default_rng([spec.seed, trial])

        v = problem.v
        if perturb_v:
            v = problem.v + perturb_stochastic(problem.v, spec.sigma, rng)
            # rounding may leave tiny negative entries on exhausted coordinates
            v = np.maximum(v, 0.0)
            v = v / v.sum()

        p_bar = problem.p_bar
        if perturb_p:
            p_bar = perturb_tensor(
                problem.p_bar, spec.tensor_budget_factor * spec.sigma, rng
            )

        perturbed = problem.with_data(p_bar=p_bar, v=v)
        changes[trial] = float(np.abs(_solve(perturbed, threads) - y_star).sum())
        bounds[trial] = perturbation_bound(
            problem.k,
            problem.alpha,
            unfolded_distance(p_bar, problem.p_bar) if perturb_p else 0.0,
            float(np.abs(v - problem.v).sum()),
        )

    violations = int(np.sum(changes > bounds))
    if violations:
        logger.warning(
            f"{violations} of {spec.trials} trials exceed the perturbation bound "
            f"(sigma={spec.sigma:.3g}, mode={target.value})."
        )
    return PerturbationRow(
        sigma=spec.sigma,
        mode=target.value,
        mean_dy=float(changes.mean()),
        max_dy=float(changes.max()),
        bound=float(bounds.max()),
        violations=violations,
    )


def perturbation_experiment(
    config: PerturbationConfig, problem: PageRankProblem
) -> list[PerturbationRow]:
    """
    Sweep perturbation magnitudes and targets on one problem.

    Parameters
    ----------
    config : PerturbationConfig
        Magnitude grid, targets, trials and seed.
    problem : PageRankProblem
        Unperturbed problem.

    Returns
    -------
    list of PerturbationRow
        One row per magnitude and target, ordered by magnitude, then target.

    Raises
    ------
    ValueError
        If the contraction constant of the problem is not below 1.
    """
    varsigma = contraction_constant(problem.k, problem.alpha)
    if varsigma >= 1:
        raise ValueError(
            f"Perturbation bound does not apply: contraction constant "
            f"{varsigma:.4f} >= 1 for k={problem.k}, alpha={problem.alpha}."
        )

    threads = resolve_threads(config.threads)
    y_star = _solve(problem, threads)
    rows = []
    for spec in config.specs():
        row = run_trials(problem, spec, y_star=y_star, threads=threads)
        logger.info(
            f"sigma={row.sigma:.3g} {row.mode}: mean |dy| = {row.mean_dy:.3e}, "
            f"bound = {row.bound:.3e}."
        )
        rows.append(row)
    return rows
