"""Convenience functions to create configurations."""

from typing import Any, Optional

from pydantic import TypeAdapter

from .configuration import HyperRankConfiguration
from .solver_model import SolverConfig


def configuration_factory(configuration: dict[str, Any]) -> HyperRankConfiguration:
    """
    Create a hyperrank configuration from a dictionary.

    Parameters
    ----------
    configuration : dict
        Configuration dictionary.

    Returns
    -------
    HyperRankConfiguration
        Validated configuration.
    """
    adapter: TypeAdapter = TypeAdapter(HyperRankConfiguration)
    return adapter.validate_python(configuration)


def create_solver_configuration(
    experiment_name: str,
    alpha: float,
    model: str = "mlppr",
    tol_step: float = 1e-8,
    tol_eq: float = 1e-10,
    max_iter: int = 100_000,
    shift: float = 0.0,
    correction: str = "implicit",
    threads: Optional[int] = None,
) -> HyperRankConfiguration:
    """
    Create a configuration for a single PageRank solve.

    Parameters
    ----------
    experiment_name : str
        Name of the experiment.
    alpha : float
        Damping probability in [0, 1).
    model : str, optional
        "mlppr" or "mpr", by default "mlppr".
    tol_step : float, optional
        Step tolerance, by default 1e-8.
    tol_eq : float, optional
        Equation residual tolerance, by default 1e-10.
    max_iter : int, optional
        Maximum number of iterations, by default 1e5.
    shift : float, optional
        Shift of the multi-linear PageRank iteration, by default 0.
    correction : str, optional
        "explicit" or "implicit" dangling correction, by default "implicit".
    threads : int, optional
        Contraction threads, by default None.

    Returns
    -------
    HyperRankConfiguration
        Configuration.
    """
    solver = SolverConfig(
        model=model,  # type: ignore[arg-type]
        alpha=alpha,
        tol_step=tol_step,
        tol_eq=tol_eq,
        max_iter=max_iter,
        shift=shift,
        correction=correction,  # type: ignore[arg-type]
        threads=threads,
    )
    return HyperRankConfiguration(experiment_name=experiment_name, solver_config=solver)
