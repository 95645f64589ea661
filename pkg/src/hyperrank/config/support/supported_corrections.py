"""Dangling correction modes."""

from __future__ import annotations

from hyperrank.utils import BaseEnum


class SupportedCorrection(str, BaseEnum):
    """How the dangling correction of the MPR tensor is realized.

    Attributes
    ----------
    EXPLICIT : str
        The correction term is materialized as tensor entries.
    IMPLICIT : str
        The correction is applied on the fly during contraction.
    """

    EXPLICIT = "explicit"
    IMPLICIT = "implicit"
