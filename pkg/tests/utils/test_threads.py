import pytest

from hyperrank.utils import resolve_threads
from hyperrank.utils.threads import THREADS_ENV_VAR


def test_default(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
    assert resolve_threads() == 1


def test_environment(monkeypatch):
    """Test that the environment variable is used when no value is given."""
    monkeypatch.setenv(THREADS_ENV_VAR, "4")
    assert resolve_threads() == 4
    assert resolve_threads(2) == 2


def test_empty_environment(monkeypatch):
    monkeypatch.setenv(THREADS_ENV_VAR, " ")
    assert resolve_threads() == 1


@pytest.mark.parametrize("value", ["four", "0", "-2", "1.5"])
def test_invalid_environment(monkeypatch, value: str):
    monkeypatch.setenv(THREADS_ENV_VAR, value)
    with pytest.raises(ValueError):
        resolve_threads()


def test_invalid_value():
    with pytest.raises(ValueError):
        resolve_threads(0)
