"""Perturbation analysis of multi-linear pseudo-PageRank."""

__all__ = [
    "PerturbationRow",
    "SimplexPerturbation",
    "perturb_stochastic",
    "perturb_tensor",
    "perturbation_bound",
    "perturbation_experiment",
    "project_capped_simplex",
    "project_perturbation",
    "run_trials",
    "unfolded_distance",
]

from .experiment import (
    PerturbationRow,
    perturbation_bound,
    perturbation_experiment,
    run_trials,
)
from .simplex import (
    SimplexPerturbation,
    perturb_stochastic,
    project_capped_simplex,
    project_perturbation,
)
from .tensor import perturb_tensor, unfolded_distance
