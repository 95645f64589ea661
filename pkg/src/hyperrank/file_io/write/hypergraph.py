"""Write hyperedge list files."""

from pathlib import Path

import numpy as np

from hyperrank.config.support import SupportedData
from hyperrank.hypergraph import UniformHypergraph


def write_hypergraph(
    file_path: Path, h: UniformHypergraph, *args: list, **kwargs: dict
) -> None:
    """
    Write a hypergraph as a hyperedge list file.

    Vertices are written 1-based after a `k=<order> directed=<0|1> n=<count>` header.
    Weights are written only when some edge weight differs from 1.

    Parameters
    ----------
    file_path : pathlib.Path
        Path to a `.hg` file.
    h : UniformHypergraph
        Hypergraph to save.
    *args : list
        Additional arguments.
    **kwargs : dict
        Additional keyword arguments.

    Raises
    ------
    ValueError
        When the file extension of `file_path` is not `.hg`.
    """
    file_path = Path(file_path)
    if file_path.suffix.lower() not in SupportedData.get_extensions(
        SupportedData.HYPERGRAPH
    ):
        raise ValueError(
            f"Unexpected extension '{file_path.suffix}' for save file type "
            f"'hypergraph'."
        )

    weighted = bool(np.any(h.weights != 1.0))
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(f"k={h.k} directed={int(h.directed)} n={h.n}\n")
        for edge, weight in zip(h.edges, h.weights):
            line = " ".join(str(int(vertex) + 1) for vertex in edge)
            if weighted:
                line += f" {float(weight)!r}"
            f.write(line + "\n")
