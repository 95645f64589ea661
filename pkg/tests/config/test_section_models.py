import numpy as np
import pytest

from hyperrank.config import (
    PartitionConfig,
    PerturbationConfig,
    PerturbationSpec,
    SolverConfig,
    SubspaceConfig,
)


def test_solver_defaults():
    """Test the solver defaults."""
    config = SolverConfig()

    assert config.model == "mlppr"
    assert config.alpha == 0.85
    assert config.tol_step == 1e-8
    assert config.tol_eq == 1e-10
    assert config.max_iter == 100_000
    assert config.threads is None


@pytest.mark.parametrize(
    "kwargs",
    [{"alpha": -0.1}, {"alpha": 1.0}, {"model": "gpr"}, {"tol_eq": -1.0}],
)
def test_solver_errors(kwargs: dict):
    """Test that invalid solver parameters raise an error."""
    with pytest.raises(ValueError):
        SolverConfig(**kwargs)


def test_partition_defaults():
    """Test the partition defaults."""
    config = PartitionConfig()

    assert config.alpha == 0.99
    assert config.ordering == "mlppr"
    assert config.parts == 2


@pytest.mark.parametrize("kwargs", [{"parts": 1}, {"ordering": "tsc"}, {"seed": -1}])
def test_partition_errors(kwargs: dict):
    """Test that invalid partition parameters raise an error."""
    with pytest.raises(ValueError):
        PartitionConfig(**kwargs)


def test_subspace_defaults():
    """Test the subspace experiment defaults."""
    config = SubspaceConfig()

    assert config.n == [100]
    assert config.methods == ["mlppr"]
    assert config.noise_scale == pytest.approx(np.sqrt(0.5))


@pytest.mark.parametrize(
    "kwargs",
    [{"n": []}, {"n": [100, 19]}, {"methods": ["random"]}, {"noise_scale": -1.0}],
)
def test_subspace_errors(kwargs: dict):
    """Test that invalid subspace parameters raise an error."""
    with pytest.raises(ValueError):
        SubspaceConfig(**kwargs)


def test_sigma_grid():
    """Test the logarithmic grid of perturbation magnitudes."""
    config = PerturbationConfig()
    np.testing.assert_allclose(config.sigma_grid(), [1e-4, 1e-3, 1e-2, 1e-1])

    single = PerturbationConfig(sigma_min=0.05, sigma_max=0.05, n_sigma=1)
    np.testing.assert_allclose(single.sigma_grid(), [0.05])


def test_specs():
    """Test that one setting is created per magnitude and target."""
    config = PerturbationConfig(n_sigma=2, targets=["v", "both"], trials=7, seed=3)
    specs = config.specs()

    assert [(spec.sigma, spec.target) for spec in specs] == [
        (pytest.approx(1e-4), "v"),
        (pytest.approx(1e-4), "both"),
        (pytest.approx(1e-1), "v"),
        (pytest.approx(1e-1), "both"),
    ]
    assert all(isinstance(spec, PerturbationSpec) for spec in specs)
    assert all(spec.trials == 7 and spec.seed == 3 for spec in specs)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"sigma_min": 0.1, "sigma_max": 0.01},
        {"sigma_min": 0.0},
        {"sigma_max": 1.0},
        {"targets": ["w"]},
    ],
)
def test_perturbation_errors(kwargs: dict):
    """Test that invalid perturbation parameters raise an error."""
    with pytest.raises(ValueError):
        PerturbationConfig(**kwargs)


def test_perturbation_spec():
    """Test the bounds of a single perturbation setting."""
    assert PerturbationSpec(sigma=0.5).target == "both"
    with pytest.raises(ValueError):
        PerturbationSpec(sigma=1.0)
