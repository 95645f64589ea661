"""Data supported by hyperrank."""

from __future__ import annotations

from typing import Union

from hyperrank.utils import BaseEnum


class SupportedData(str, BaseEnum):
    """Supported data types.

    Attributes
    ----------
    HYPERGRAPH : str
        Hyperedge list text file.
    SNAP : str
        Directed edge list in the SNAP text format.
    POINTS : str
        CSV point set with ground-truth labels.
    """

    HYPERGRAPH = "hypergraph"
    SNAP = "snap"
    POINTS = "points"

    @classmethod
    def _missing_(cls, value: object) -> SupportedData:
        """
        Override default behaviour for missing values.

        This method is called when `value` is not found in the enum values. It converts
        `value` to lowercase, removes "." if it is the first character and tries to
        match it with enum values or file extensions.

        Parameters
        ----------
        value : object
            Value to be matched with enum values.

        Returns
        -------
        SupportedData
            Matched enum value.
        """
        if isinstance(value, str):
            lower_value = value.lower()

            if lower_value.startswith("."):
                lower_value = lower_value[1:]

            # attempt to match lowercase value with enum values
            for member in cls:
                if member.value == lower_value:
                    return member

            # attempt to match file extensions
            for member in cls:
                if f".{lower_value}" in _EXTENSIONS[member.value]:
                    return member

        # still missing
        return super()._missing_(value)  # type: ignore[return-value]

    @classmethod
    def get_extension(cls, data_type: Union[str, SupportedData]) -> str:
        """
        Get the default file extension of the corresponding data type.

        Parameters
        ----------
        data_type : str or SupportedData
            Data type.

        Returns
        -------
        str
            Corresponding extension.
        """
        return _EXTENSIONS[cls(data_type).value][0]

    @classmethod
    def get_extensions(cls, data_type: Union[str, SupportedData]) -> tuple[str, ...]:
        """
        Get every file extension accepted for the data type.

        Parameters
        ----------
        data_type : str or SupportedData
            Data type.

        Returns
        -------
        tuple of str
            Extensions, lowercase and with a leading dot.
        """
        return _EXTENSIONS[cls(data_type).value]


_EXTENSIONS: dict[str, tuple[str, ...]] = {
    "hypergraph": (".hg",),
    "snap": (".txt", ".tsv"),
    "points": (".csv",),
}
