from pathlib import Path

import pytest

from hyperrank.config import (
    configuration_factory,
    load_configuration,
    save_configuration,
)


def test_config_to_yaml(tmp_path: Path, minimum_configuration: dict):
    """Test that we can export a config to yaml and load it back"""
    minimum_configuration["perturbation_config"] = {"targets": ["v"], "trials": 10}
    myconf = configuration_factory(minimum_configuration)

    # export to yaml
    yaml_path = save_configuration(myconf, tmp_path)
    assert yaml_path.exists()
    assert yaml_path.name == "config.yml"

    # load from yaml
    my_other_conf = load_configuration(yaml_path)
    assert my_other_conf == myconf


def test_config_to_yaml_file(tmp_path: Path, minimum_configuration: dict):
    """Test that a .yaml file path is used as is."""
    myconf = configuration_factory(minimum_configuration)
    yaml_path = save_configuration(myconf, tmp_path / "experiment.yaml")

    assert yaml_path == tmp_path / "experiment.yaml"
    assert load_configuration(str(yaml_path)) == myconf


def test_config_to_yaml_wrong_path(tmp_path: Path, minimum_configuration: dict):
    """Test that an error is raised when the path is not a directory and not a .yml"""
    myconf = configuration_factory(minimum_configuration)

    yaml_path = tmp_path / "tmp.txt"
    with pytest.raises(ValueError):
        save_configuration(myconf, yaml_path)

    # existing file
    yaml_path.touch()
    with pytest.raises(ValueError):
        save_configuration(myconf, yaml_path)


def test_load_missing_file(tmp_path: Path):
    """Test that loading a missing file raises an error."""
    with pytest.raises(FileNotFoundError):
        load_configuration(tmp_path / "missing.yml")
