"""Plot-ready tables and JSON summaries."""

import csv
import json
from collections.abc import Iterable, Sequence
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np


def write_csv(
    file_path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]
) -> None:
    """
    Write rows under a header as comma-separated values.

    Parameters
    ----------
    file_path : pathlib.Path
        Output path.
    header : Sequence of str
        Column names.
    rows : Iterable of Sequence
        Rows with one value per column.

    Raises
    ------
    ValueError
        If a row does not have one value per column.
    """
    with open(Path(file_path), "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            if len(row) != len(header):
                raise ValueError(
                    f"Row {list(row)} does not match the header {list(header)}."
                )
            writer.writerow(row)


def _to_serializable(value: Any) -> Any:
    """Convert numpy values, paths and enums for `json.dump`.

    Parameters
    ----------
    value : Any
        Value unknown to the JSON encoder.

    Returns
    -------
    Any
        JSON compatible value.

    Raises
    ------
    TypeError
        If the value cannot be converted.
    """
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"Object of type {type(value).__name__} is not serializable.")


def write_json(file_path: Path, payload: dict[str, Any]) -> None:
    """
    Write a summary dictionary as indented JSON.

    Parameters
    ----------
    file_path : pathlib.Path
        Output path.
    payload : dict
        Summary, may contain numpy arrays and scalars.
    """
    with open(Path(file_path), "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, default=_to_serializable)
        f.write("\n")
