"""Pydantic hyperrank configuration."""

from __future__ import annotations

import re
from pprint import pformat
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .partition_model import PartitionConfig
from .perturbation_model import PerturbationConfig
from .solver_model import SolverConfig
from .subspace_model import SubspaceConfig


class HyperRankConfiguration(BaseModel):
    """
    hyperrank configuration.

    The configuration gathers the parameters of every pipeline so that a run can be
    reproduced from a single YAML file. Every sub-configuration has defaults.

    Attributes
    ----------
    experiment_name : str
        Name of the experiment, used when saving results.
    solver_config : SolverConfig
        PageRank solver parameters.
    partition_config : PartitionConfig
        Spectral partitioning parameters.
    subspace_config : SubspaceConfig
        Line clustering experiment parameters.
    perturbation_config : PerturbationConfig
        Perturbation experiment parameters.

    Raises
    ------
    ValueError
        If the experiment name contains invalid characters or is empty.

    Examples
    --------
    >>> from hyperrank.config import configuration_factory
    >>> config = configuration_factory(
    ...     {"experiment_name": "toy", "solver_config": {"alpha": 0.2}}
    ... )
    >>> config.solver_config.alpha
    0.2
    """

    model_config = ConfigDict(
        validate_assignment=True,
    )

    version: Literal["0.1.0"] = "0.1.0"
    """Configuration version."""

    experiment_name: str
    """Name of the experiment."""

    solver_config: SolverConfig = Field(default_factory=SolverConfig)
    partition_config: PartitionConfig = Field(default_factory=PartitionConfig)
    subspace_config: SubspaceConfig = Field(default_factory=SubspaceConfig)
    perturbation_config: PerturbationConfig = Field(default_factory=PerturbationConfig)

    @field_validator("experiment_name")
    @classmethod
    def no_symbol(cls, name: str) -> str:
        """
        Validate experiment name.

        A valid experiment name is a non-empty string with only contains letters,
        numbers, underscores, dashes and spaces.

        Parameters
        ----------
        name : str
            Name to validate.

        Returns
        -------
        str
            Validated name.

        Raises
        ------
        ValueError
            If the name is empty or contains invalid characters.
        """
        if len(name) == 0 or name.isspace():
            raise ValueError("Experiment name is empty.")

        if not re.match(r"^[a-zA-Z0-9_\- ]*$", name):
            raise ValueError(
                f"Experiment name contains invalid characters (got {name}). "
                f"Only letters, numbers, underscores, dashes and spaces are allowed."
            )

        return name

    def __str__(self) -> str:
        """
        Pretty string representing the configuration.

        Returns
        -------
        str
            Pretty string.
        """
        return pformat(self.model_dump())
