"""String enumerations accepting their values in membership tests."""

from enum import Enum, EnumMeta
from typing import Any


class _ValueContainer(EnumMeta):
    """Enum metaclass whose `in` operator also accepts member values."""

    def __contains__(cls, item: Any) -> bool:
        """Whether `item` is a member or resolves to one.

        Parameters
        ----------
        item : Any
            Member or value.

        Returns
        -------
        bool
            True if `cls(item)` succeeds.
        """
        try:
            cls(item)
        except ValueError:
            return False
        return True


class BaseEnum(Enum, metaclass=_ValueContainer):
    """Base of the supported option enums.

    Examples
    --------
    >>> from hyperrank.utils.base_enum import BaseEnum
    >>> class Colour(str, BaseEnum):
    ...     RED = "red"
    ...     BLUE = "blue"
    >>> "red" in Colour
    True
    >>> Colour.values()
    ['red', 'blue']
    """

    @classmethod
    def values(cls) -> list[Any]:
        """
        Values of all members, in definition order.

        Returns
        -------
        list
            Member values.
        """
        return [member.value for member in cls]
