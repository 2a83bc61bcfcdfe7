import pytest

import main as cli
from config import ToolkitConfig


@pytest.fixture
def config(monkeypatch):
    for name in ("BICOMPLEX_LAPLACIAN_H", "BICOMPLEX_PARTIAL_H", "BICOMPLEX_HARMONIC_TOL", "BICOMPLEX_QUAD_NODES",
                 "BICOMPLEX_OUTPUT_DIR", "BICOMPLEX_LOG_DIR", "BICOMPLEX_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    return ToolkitConfig()


def test_defaults(config):
    assert config.get_laplacian_h() == 1e-3
    assert config.get_partial_h() == 1e-4
    assert config.get_harmonic_tol() == 1e-4
    assert config.get_quadrature_nodes() == 32
    assert config.get_output_dir() == "."
    assert config.get_log_dir() == ""
    assert config.get_log_level() == "INFO"


def test_environment_overrides(config, monkeypatch):
    monkeypatch.setenv("BICOMPLEX_LAPLACIAN_H", "5e-4")
    monkeypatch.setenv("BICOMPLEX_QUAD_NODES", "  ")
    monkeypatch.setenv("BICOMPLEX_LOG_LEVEL", "debug")
    assert config.get_laplacian_h() == 5e-4
    assert config.get_quadrature_nodes() == 32
    assert config.get_log_level() == "DEBUG"


def test_validation_flags_bad_values(config, monkeypatch):
    assert all(config.validate_configuration().values())
    assert "All numeric settings valid" in config.get_configuration_summary()
    monkeypatch.setenv("BICOMPLEX_PARTIAL_H", "-1")
    monkeypatch.setenv("BICOMPLEX_QUAD_NODES", "many")
    validation = config.validate_configuration()
    assert validation["partial_h"] is False
    assert validation["quadrature_nodes"] is False
    assert "Invalid: partial_h, quadrature_nodes" in config.get_configuration_summary()


def test_cli_rejects_invalid_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("BICOMPLEX_OUTPUT_DIR", str(tmp_path))
    monkeypatch.setenv("BICOMPLEX_LAPLACIAN_H", "zero")
    argv = ["grid-info", "--grid-x", "0", "1", "--grid-y", "0", "1", "--nx", "2", "--ny", "2"]
    assert cli.main(argv) == 2


def test_log_file_per_run(tmp_path, monkeypatch):
    log_dir = tmp_path / "logs"
    monkeypatch.setenv("BICOMPLEX_OUTPUT_DIR", str(tmp_path))
    monkeypatch.setenv("BICOMPLEX_LOG_DIR", str(log_dir))
    argv = ["grid-info", "--grid-x", "0", "1", "--grid-y", "0", "1", "--nx", "2", "--ny", "2", "--debug"]
    assert cli.main(argv) == 0
    files = list(log_dir.glob("bicomplex_toolkit_*.log"))
    assert len(files) == 1
    assert "grid-info starting" in files[0].read_text(encoding="utf-8")
