"""Read labeled point sets."""

from pathlib import Path

import numpy as np

from hyperrank.config.support import SupportedData
from hyperrank.subspace import PointSet

POINTS_HEADER = ("x", "y", "label")


def read_points(file_path: Path, *args: list, **kwargs: dict) -> PointSet:
    """
    Read a point set from a CSV file with header `x,y,label`.

    Parameters
    ----------
    file_path : pathlib.Path
        Path to a `.csv` file.
    *args : list
        Additional arguments.
    **kwargs : dict
        Additional keyword arguments.

    Returns
    -------
    PointSet
        Points, outliers labeled -1.

    Raises
    ------
    ValueError
        If the file is not a CSV file or its header or values are invalid.
    """
    file_path = Path(file_path)
    if file_path.suffix.lower() not in SupportedData.get_extensions(
        SupportedData.POINTS
    ):
        raise ValueError(f"File {file_path} is not a valid point set (.csv).")

    with open(file_path, encoding="utf-8") as f:
        header = tuple(token.strip() for token in f.readline().split(","))
    if header != POINTS_HEADER:
        raise ValueError(
            f"Point set header must be {','.join(POINTS_HEADER)} (got "
            f"{','.join(header)})."
        )

    try:
        data = np.loadtxt(file_path, delimiter=",", skiprows=1, ndmin=2)
    except ValueError as e:
        raise ValueError(f"Malformed point set {file_path}: {e}") from e
    if data.shape[1] != 3:
        raise ValueError(f"Point set rows must have 3 values (got {data.shape[1]}).")

    labels = data[:, 2]
    if not np.all(labels == np.round(labels)):
        raise ValueError("Point labels must be integers.")
    return PointSet(data[:, :2], labels.astype(np.int64))
