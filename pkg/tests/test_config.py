# -*- coding: utf-8 -*-
import pytest

from lk_spaces.config import DEFAULT_CONFIG, ENV_TOLERANCE, LKConfig
from lk_spaces.validator import LKValidationError, SpaceSpecValidator


def test_defaults():
    assert DEFAULT_CONFIG.piece_rel_tol == 1e-8
    assert DEFAULT_CONFIG.tail_rel_tol == 1e-6
    assert DEFAULT_CONFIG.digest_algorithm == "sha3-256"


@pytest.mark.parametrize("tol, tail", [(1e-10, 1e-6), (1e-7, 1e-5), (1e-3, 1e-3)])
def test_with_tolerance(tol, tail):
    config = DEFAULT_CONFIG.with_tolerance(tol)
    assert config.piece_rel_tol == tol
    assert config.tail_rel_tol == pytest.approx(tail)


@pytest.mark.parametrize("tol", [0.0, 1e-13, 0.5])
def test_tolerance_bounds(tol):
    with pytest.raises(LKValidationError):
        SpaceSpecValidator.validate_tolerance(tol)


@pytest.mark.parametrize(
    "overrides",
    [{"points_per_decade": 2}, {"samples": 0}, {"sweep_decades": 0}, {"piece_rel_tol": 1.0}],
)
def test_invalid_config(overrides):
    with pytest.raises(LKValidationError):
        LKConfig(**overrides)


def test_from_dict_rejects_unknown_keys():
    with pytest.raises(LKValidationError):
        LKConfig.from_dict({"seed": 1, "colour": "red"})


def test_load_yaml(tmp_path):
    path = tmp_path / "lk.yaml"
    path.write_text("seed: 7\nsamples: 12\n", encoding="utf-8")
    config = LKConfig.load(path)
    assert config.seed == 7
    assert config.samples == 12
    assert config.piece_rel_tol == DEFAULT_CONFIG.piece_rel_tol


def test_load_missing_explicit_path(tmp_path):
    with pytest.raises(LKValidationError):
        LKConfig.load(tmp_path / "absent.yaml")


def test_load_without_file_uses_defaults(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert LKConfig.load() == DEFAULT_CONFIG


def test_environment_tolerance(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv(ENV_TOLERANCE, "1e-6")
    config = LKConfig.load()
    assert config.piece_rel_tol == 1e-6
    assert config.tail_rel_tol == pytest.approx(1e-4)


def test_environment_tolerance_not_a_number(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv(ENV_TOLERANCE, "tight")
    with pytest.raises(LKValidationError):
        LKConfig.load()


def test_yaml_must_be_mapping(tmp_path):
    path = tmp_path / "lk.yaml"
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(LKValidationError):
        LKConfig.load(path)
