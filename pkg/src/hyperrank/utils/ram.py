"""Utility function to get RAM size."""

import psutil


def get_ram_size() -> float:
    """
    Get available RAM size in mbytes.

    Returns
    -------
    float
        Available RAM size in mbytes.
    """
    return psutil.virtual_memory().available / 1024**2
