"""Perturbation experiment configuration."""

from __future__ import annotations

from pprint import pformat
from typing import Literal, Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self


class PerturbationSpec(BaseModel):
    """
    A single perturbation setting.

    Attributes
    ----------
    sigma : float
        Magnitude `||delta v||_1`, in (0, 1).
    target : {"v", "tensor", "both"}
        Perturbed data.
    trials : int
        Number of random perturbations.
    seed : int
        Master seed, trial seeds are derived from it.
    tensor_budget_factor : float
        Ratio of the tensor budget `||R(delta P_bar)||_1` to `sigma`.
    """

    model_config = ConfigDict(
        validate_assignment=True,
    )

    sigma: float = Field(gt=0.0, lt=1.0)
    target: Literal["v", "tensor", "both"] = "both"
    trials: int = Field(default=100, ge=1)
    seed: int = Field(default=0, ge=0)
    tensor_budget_factor: float = Field(default=4.0, ge=0.0)

    def __str__(self) -> str:
        """Pretty string representing the configuration.

        Returns
        -------
        str
            Pretty string.
        """
        return pformat(self.model_dump())


class PerturbationConfig(BaseModel):
    """
    Parameters of the perturbation experiment.

    Attributes
    ----------
    sigma_min : float
        Smallest magnitude of the log grid.
    sigma_max : float
        Largest magnitude of the log grid.
    n_sigma : int
        Number of grid points.
    targets : list of {"v", "tensor", "both"}
        Perturbed data, one table block per target.
    trials : int
        Random perturbations per grid point and target.
    seed : int
        Master seed.
    tensor_budget_factor : float
        Ratio of the tensor budget to `sigma`.
    threads : int, optional
        Contraction threads of every solve, by default resolved from
        `HYPERRANK_THREADS`.

    Examples
    --------
    >>> import numpy as np
    >>> from hyperrank.config import PerturbationConfig
    >>> config = PerturbationConfig(sigma_min=1e-4, sigma_max=1e-1, n_sigma=4)
    >>> np.round(config.sigma_grid(), 6).tolist()
    [0.0001, 0.001, 0.01, 0.1]
    """

    model_config = ConfigDict(
        validate_assignment=True,
    )

    sigma_min: float = Field(default=1e-4, gt=0.0, lt=1.0)
    sigma_max: float = Field(default=1e-1, gt=0.0, lt=1.0)
    n_sigma: int = Field(default=4, ge=1)
    targets: list[Literal["v", "tensor", "both"]] = Field(
        default=["both", "v", "tensor"], min_length=1
    )
    trials: int = Field(default=100, ge=1)
    seed: int = Field(default=0, ge=0)
    tensor_budget_factor: float = Field(default=4.0, ge=0.0)
    threads: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def validate_grid(self: Self) -> Self:
        """
        Validate the grid bounds.

        Returns
        -------
        Self
            Validated configuration.

        Raises
        ------
        ValueError
            If `sigma_min` is larger than `sigma_max`.
        """
        if self.sigma_min > self.sigma_max:
            raise ValueError(
                f"sigma_min ({self.sigma_min}) must not exceed sigma_max "
                f"({self.sigma_max})."
            )
        return self

    def sigma_grid(self) -> NDArray:
        """
        Logarithmically spaced magnitudes.

        Returns
        -------
        NDArray
            Grid of `n_sigma` values from `sigma_min` to `sigma_max`.
        """
        if self.n_sigma == 1:
            return np.array([self.sigma_min])
        return np.logspace(
            np.log10(self.sigma_min), np.log10(self.sigma_max), self.n_sigma
        )

    def specs(self) -> list[PerturbationSpec]:
        """
        One perturbation setting per grid point and target.

        Returns
        -------
        list of PerturbationSpec
            Settings ordered by magnitude, then target.
        """
        return [
            PerturbationSpec(
                sigma=float(sigma),
                target=target,
                trials=self.trials,
                seed=self.seed,
                tensor_budget_factor=self.tensor_budget_factor,
            )
            for sigma in self.sigma_grid()
            for target in self.targets
        ]

    def __str__(self) -> str:
        """Pretty string representing the configuration.

        Returns
        -------
        str
            Pretty string.
        """
        return pformat(self.model_dump())
