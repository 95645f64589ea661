"""Write labeled point sets."""

from pathlib import Path

from hyperrank.config.support import SupportedData
from hyperrank.subspace import PointSet

from .tables import write_csv


def write_points(file_path: Path, ps: PointSet, *args: list, **kwargs: dict) -> None:
    """
    Write a planar point set as CSV with header `x,y,label`.

    Parameters
    ----------
    file_path : pathlib.Path
        Path to a `.csv` file.
    ps : PointSet
        Points in the plane.
    *args : list
        Additional arguments.
    **kwargs : dict
        Additional keyword arguments.

    Raises
    ------
    ValueError
        If the extension is not `.csv` or the points are not planar.
    """
    file_path = Path(file_path)
    if file_path.suffix.lower() not in SupportedData.get_extensions(
        SupportedData.POINTS
    ):
        raise ValueError(
            f"Unexpected extension '{file_path.suffix}' for save file type 'points'."
        )
    if ps.points.shape[1] != 2:
        raise ValueError("Only planar point sets can be written.")

    rows = (
        (repr(float(x)), repr(float(y)), int(label))
        for (x, y), label in zip(ps.points, ps.labels)
    )
    write_csv(file_path, ("x", "y", "label"), rows)
