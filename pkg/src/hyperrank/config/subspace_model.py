"""Subspace clustering configuration."""

from __future__ import annotations

import math
from pprint import pformat
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class SubspaceConfig(BaseModel):
    """
    Parameters of the line clustering experiment.

    Attributes
    ----------
    n : list of int
        Instance sizes, each at least 20.
    repeats : int
        Number of seeds per size, starting at `seed`.
    seed : int
        First seed.
    noise_scale : float
        Standard deviation of the Gaussian noise on clustered points.
    methods : list of {"mlppr", "mpr", "gpr"}
        Ordering methods to compare.
    parts : int
        Number of clusters to recover.
    threads : int, optional
        Contraction threads, by default resolved from `HYPERRANK_THREADS`.
    """

    model_config = ConfigDict(
        validate_assignment=True,
    )

    n: list[int] = Field(default=[100], min_length=1)
    repeats: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0)
    noise_scale: float = Field(default=math.sqrt(0.5), ge=0.0)
    methods: list[Literal["mlppr", "mpr", "gpr"]] = Field(
        default=["mlppr"], min_length=1
    )
    parts: int = Field(default=4, ge=2)
    threads: Optional[int] = Field(default=None, ge=1)

    @field_validator("n")
    @classmethod
    def validate_sizes(cls, sizes: list[int]) -> list[int]:
        """
        Validate instance sizes.

        Parameters
        ----------
        sizes : list of int
            Instance sizes.

        Returns
        -------
        list of int
            Validated sizes.

        Raises
        ------
        ValueError
            If a size is below 20.
        """
        for size in sizes:
            if size < 20:
                raise ValueError(f"Instance size must be at least 20 (got {size}).")
        return sizes

    def __str__(self) -> str:
        """Pretty string representing the configuration.

        Returns
        -------
        str
            Pretty string.
        """
        return pformat(self.model_dump())
