"""Doctest collection for the hyperrank sources.

Docstring examples are run by sybil, with `np` and a temporary `my_path` directory
available in their namespace.
"""

from pathlib import Path
from typing import Any

import numpy as np
import pytest
from pytest import TempPathFactory
from sybil import Sybil
from sybil.parsers.codeblock import PythonCodeBlockParser
from sybil.parsers.doctest import DocTestParser


@pytest.fixture(scope="module")
def my_path(tmp_path_factory: TempPathFactory) -> Path:
    """Temporary directory shared by the examples of a module.

    Parameters
    ----------
    tmp_path_factory : TempPathFactory
        Temporary path factory from pytest.

    Returns
    -------
    Path
        Temporary directory path.
    """
    return tmp_path_factory.mktemp("my_path")


def _namespace(namespace: dict[str, Any]) -> None:
    namespace["np"] = np


pytest_collect_file = Sybil(
    parsers=[DocTestParser(), PythonCodeBlockParser()],
    patterns=["*.py"],
    excludes=["conftest.py"],
    setup=_namespace,
    fixtures=["my_path"],
).pytest()
