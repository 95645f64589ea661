"""Read hyperedge list files."""

from pathlib import Path
from typing import Optional

import numpy as np

from hyperrank.config.support import SupportedData
from hyperrank.hypergraph import UniformHypergraph
from hyperrank.utils import get_logger

logger = get_logger(__name__)


def _parse_header(line: str, line_number: int) -> dict[str, int]:
    fields = {}
    for token in line.split():
        key, sep, value = token.partition("=")
        if not sep or key not in ("k", "directed", "n"):
            raise ValueError(
                f"Line {line_number}: unexpected header token '{token}' (expected "
                f"'k=<order> directed=<0|1>' with an optional 'n=<count>')."
            )
        try:
            fields[key] = int(value)
        except ValueError as e:
            raise ValueError(
                f"Line {line_number}: header value '{token}' is not an integer."
            ) from e

    if "k" not in fields or "directed" not in fields:
        raise ValueError(
            f"Line {line_number}: header must define both 'k' and 'directed'."
        )
    if fields["directed"] not in (0, 1):
        raise ValueError(f"Line {line_number}: 'directed' must be 0 or 1.")
    return fields


def read_hypergraph(file_path: Path, *args: list, **kwargs: dict) -> UniformHypergraph:
    """
    Read a hypergraph from a hyperedge list file.

    The first non-comment line is the header `k=<order> directed=<0|1>`, optionally
    followed by `n=<count>`. Every other line lists the 1-based vertices of an edge,
    the head last for directed arcs, and an optional weight. Text after `#` is
    ignored. Without `n`, the number of vertices is the largest vertex index.

    Parameters
    ----------
    file_path : pathlib.Path
        Path to a `.hg` file.
    *args : list
        Additional arguments.
    **kwargs : dict
        Additional keyword arguments.

    Returns
    -------
    UniformHypergraph
        Hypergraph with 0-based vertices.

    Raises
    ------
    ValueError
        If the file is not a `.hg` file or is malformed.
    """
    file_path = Path(file_path)
    if file_path.suffix.lower() not in SupportedData.get_extensions(
        SupportedData.HYPERGRAPH
    ):
        raise ValueError(f"File {file_path} is not a valid hyperedge list (.hg).")

    header: Optional[dict[str, int]] = None
    edges: list[list[int]] = []
    weights: list[float] = []

    with open(file_path, encoding="utf-8") as f:
        for line_number, raw in enumerate(f, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if header is None:
                header = _parse_header(line, line_number)
                continue

            k = header["k"]
            tokens = line.split()
            if len(tokens) not in (k, k + 1):
                raise ValueError(
                    f"Line {line_number}: expected {k} vertices and an optional "
                    f"weight (got {len(tokens)} values)."
                )
            try:
                edges.append([int(token) - 1 for token in tokens[:k]])
                weights.append(float(tokens[k]) if len(tokens) > k else 1.0)
            except ValueError as e:
                raise ValueError(f"Line {line_number}: {e}") from e

    if header is None:
        raise ValueError(f"File {file_path} has no 'k=<order> directed=<0|1>' header.")

    edge_array = np.asarray(edges, dtype=np.int64).reshape(-1, header["k"])
    if edge_array.size > 0 and edge_array.min() < 0:
        raise ValueError("Vertices are numbered from 1 in hyperedge list files.")
    n = header.get("n", int(edge_array.max()) + 1 if edge_array.size > 0 else 0)

    h = UniformHypergraph(
        n, header["k"], edge_array, weights, directed=bool(header["directed"])
    )
    logger.info(f"Read {h.m} edges on {h.n} vertices from {file_path.name}.")
    return h
