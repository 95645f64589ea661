"""Utility functions for the hyperrank CLI."""

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Optional

import click
import numpy as np
import typer
import yaml
from click.core import ParameterSource
from numpy.typing import NDArray
from pydantic import BaseModel
from typer.core import TyperGroup

from hyperrank.config import (
    HyperRankConfiguration,
    load_configuration,
    save_configuration,
)
from hyperrank.utils import check_path_exists, check_stochastic, get_logger, uniform

logger = get_logger(__name__)

EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NOT_CONVERGED = 3

DATA_ERRORS = (
    ValueError,
    FileNotFoundError,
    OverflowError,
    MemoryError,
    yaml.YAMLError,
)


class HyperRankGroup(TyperGroup):
    """Command group reporting command-line usage errors with exit code 1."""

    def make_context(self, *args: Any, **kwargs: Any) -> click.Context:
        """
        Create the group context, relabelling usage errors.

        Parameters
        ----------
        *args : Any
            Positional arguments of `click.Group.make_context`.
        **kwargs : Any
            Keyword arguments of `click.Group.make_context`.

        Returns
        -------
        click.Context
            Context of the group.
        """
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx: click.Context) -> Any:
        """
        Invoke the subcommand, relabelling usage errors of its options.

        Parameters
        ----------
        ctx : click.Context
            Group context.

        Returns
        -------
        Any
            Return value of the subcommand.
        """
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


@contextmanager
def data_errors() -> Iterator[None]:
    """
    Turn data errors into a message on standard error and exit code 2.

    Yields
    ------
    None
        Control to the guarded block.

    Raises
    ------
    typer.Exit
        With code 2 when the block raises a data error.
    """
    try:
        yield
    except DATA_ERRORS as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(code=EXIT_DATA) from e


def load_vector(value: str, n: int) -> NDArray:
    """
    Teleportation vector from a command-line value.

    Parameters
    ----------
    value : str
        "uniform", or the path of a text file holding one entry per line. Lines
        starting with `#` are ignored.
    n : int
        Expected dimension.

    Returns
    -------
    NDArray
        Stochastic vector of dimension `n`.

    Raises
    ------
    ValueError
        If the file does not hold a stochastic vector of dimension `n`.
    """
    if value == "uniform":
        return uniform(n)
    path = check_path_exists(value)
    vector = np.loadtxt(path, comments="#", dtype=np.float64, ndmin=1)
    return check_stochastic(vector, n)


def parse_sigma_grid(value: str) -> tuple[float, float, int]:
    """
    Parse a `min:max` or `min:max:count` magnitude grid.

    Parameters
    ----------
    value : str
        Grid description, e.g. "1e-4:1e-1".

    Returns
    -------
    tuple of (float, float, int)
        Smallest magnitude, largest magnitude and number of grid points. Without a
        count, one point per decade is used.

    Raises
    ------
    typer.BadParameter
        If the value cannot be parsed.
    """
    fields = value.split(":")
    if len(fields) not in (2, 3):
        raise typer.BadParameter(
            f"Expected 'min:max' or 'min:max:count' (got '{value}')."
        )
    try:
        sigma_min, sigma_max = float(fields[0]), float(fields[1])
        if len(fields) == 3:
            count = int(fields[2])
        elif sigma_min > 0 and sigma_max > 0:
            count = int(round(np.log10(sigma_max / sigma_min))) + 1
        else:
            count = 1
    except ValueError as e:
        raise typer.BadParameter(f"Invalid magnitude grid '{value}'.") from e
    return sigma_min, sigma_max, max(count, 1)


def ensure_parent(value: Optional[Path]) -> Optional[Path]:
    """
    Create the parent directory of an optional output path.

    Parameters
    ----------
    value : pathlib.Path, optional
        Output path.

    Returns
    -------
    pathlib.Path, optional
        The same path.
    """
    if value is not None:
        value.parent.mkdir(parents=True, exist_ok=True)
    return value


def load_config_file(path: Optional[Path]) -> Optional[HyperRankConfiguration]:
    """
    Load an optional YAML configuration.

    Parameters
    ----------
    path : pathlib.Path, optional
        Configuration file.

    Returns
    -------
    HyperRankConfiguration, optional
        Configuration, or None without a path.
    """
    if path is None:
        return None
    config = load_configuration(path)
    logger.info(f"Loaded configuration '{config.experiment_name}' from {path}.")
    return config


def merge_options(
    ctx: click.Context,
    section: Optional[BaseModel],
    options: dict[str, tuple[str, Any]],
) -> dict[str, Any]:
    """
    Field values of a configuration section overridden by command-line options.

    An option typed on the command line always wins. An option left at its default
    takes the value of the loaded section, or its own default when no section was
    loaded.

    Parameters
    ----------
    ctx : click.Context
        Command context.
    section : pydantic.BaseModel, optional
        Loaded configuration section.
    options : dict of str to (str, Any)
        Section field mapped to the command parameter that sets it and the value
        of that parameter.

    Returns
    -------
    dict of str to Any
        Field values.
    """
    values = {}
    for field, (param, value) in options.items():
        source = ctx.get_parameter_source(param)
        given = source is not None and source != ParameterSource.DEFAULT
        values[field] = value if given or section is None else getattr(section, field)
    return values


def save_config_file(
    path: Optional[Path],
    loaded: Optional[HyperRankConfiguration],
    command: str,
    **sections: BaseModel,
) -> Optional[Path]:
    """
    Save the configuration of a run.

    The sections used by the command replace those of the loaded configuration;
    the other sections are kept.

    Parameters
    ----------
    path : pathlib.Path, optional
        Directory or .yml file, nothing is saved when None.
    loaded : HyperRankConfiguration, optional
        Configuration the run started from.
    command : str
        Command name, used as experiment name without a loaded configuration.
    **sections : pydantic.BaseModel
        Sections used by the run, keyed by field name, e.g. `solver_config`.

    Returns
    -------
    pathlib.Path, optional
        Path of the saved file.
    """
    if path is None:
        return None
    full = (
        loaded.model_copy(deep=True)
        if loaded is not None
        else HyperRankConfiguration(experiment_name=command)
    )
    for name, section in sections.items():
        setattr(full, name, section)
    saved = save_configuration(full, path)
    logger.info(f"Saved configuration to {saved}.")
    return saved
