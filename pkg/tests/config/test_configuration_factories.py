import pytest

from hyperrank.config import (
    HyperRankConfiguration,
    configuration_factory,
    create_solver_configuration,
)


def test_configuration_factory(minimum_configuration: dict):
    """Test that the factory validates a dictionary."""
    minimum_configuration["partition_config"] = {"parts": 4, "ordering": "gpr"}
    config = configuration_factory(minimum_configuration)

    assert isinstance(config, HyperRankConfiguration)
    assert config.partition_config.parts == 4
    assert config.partition_config.ordering == "gpr"


def test_configuration_factory_error(minimum_configuration: dict):
    """Test that invalid sections raise an error."""
    minimum_configuration["solver_config"] = {"model": "gpr"}
    with pytest.raises(ValueError):
        configuration_factory(minimum_configuration)


def test_create_solver_configuration():
    """Test the solver configuration convenience function."""
    config = create_solver_configuration(
        "toy", alpha=0.2, model="mpr", shift=0.5, correction="explicit", threads=2
    )

    assert config.experiment_name == "toy"
    assert config.solver_config.alpha == 0.2
    assert config.solver_config.model == "mpr"
    assert config.solver_config.shift == 0.5
    assert config.solver_config.correction == "explicit"
    assert config.solver_config.threads == 2


@pytest.mark.parametrize(
    "kwargs",
    [
        {"alpha": 1.0},
        {"alpha": 0.5, "tol_step": 0.0},
        {"alpha": 0.5, "max_iter": 0},
        {"alpha": 0.5, "shift": -1.0},
        {"alpha": 0.5, "correction": "lazy"},
        {"alpha": 0.5, "threads": 0},
    ],
)
def test_create_solver_configuration_errors(kwargs: dict):
    """Test that invalid parameters raise an error."""
    with pytest.raises(ValueError):
        create_solver_configuration("toy", **kwargs)
