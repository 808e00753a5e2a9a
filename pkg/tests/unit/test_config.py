"""All unit tests for the application configuration are defined here."""

import io

import pytest

from siglo.core.config import Config, ConstantsConfig, RuntimeConfig


def test_example_defaults():
    config = Config.example()

    assert config.logging.level == "INFO"
    assert config.metrics.filename == "metrics.prom"
    assert config.solver.restarts == 8
    assert config.constants.theta_1 == 0.25
    assert config.constants.theta_2 == pytest.approx(0.3772, abs=1e-4)


def test_dump_and_load(tmp_path):
    config = Config.example()
    config.runtime.threads = 3
    config.constants.theta_3 = 0.42
    path = tmp_path / "config.yaml"

    config.dump(path)
    loaded = Config.load(path)

    assert loaded.runtime.threads == 3
    assert loaded.constants.theta_3 == 0.42
    assert loaded.solver == config.solver


def test_missing_sections_take_defaults():
    config = Config.load(io.StringIO("solver:\n  restarts: 2\n"))

    assert config.solver.restarts == 2
    assert config.solver.max_iters == 200
    assert config.runtime.output_dir == "out"


def test_file_loggers_are_parsed():
    config = Config.load(
        io.StringIO(
            "logging:\n  level: DEBUG\n  run_log_level: INFO\n"
            "  files:\n    - filename: run.log\n      level: INFO\n"
        )
    )

    assert config.logging.files[0].filename == "run.log"


def test_unknown_key_is_rejected():
    with pytest.raises(ValueError):
        Config.load(io.StringIO("solver:\n  restartz: 2\n"))


def test_default_without_path(monkeypatch):
    monkeypatch.delenv("CONFIG_PATH", raising=False)

    assert Config.from_file_or_default(None).solver.restarts == 8


def test_numeric_sections_only():
    config = Config.example()
    config.solver.tol = 1e-9

    sections = config.to_order_dict(Config.NUMERIC_SECTIONS)

    assert list(sections) == ["solver", "constants"]
    assert sections["solver"]["tol"] == 1e-9
    assert sections["constants"]["theta_1"] == 0.25


def test_dump_selected_sections():
    stream = io.StringIO()

    Config.example().dump(stream, sections=("constants",))

    assert stream.getvalue().startswith("constants:")
    assert "solver" not in stream.getvalue()


def test_threads_are_capped_by_environment(monkeypatch):
    monkeypatch.setenv("SIGLO_THREADS", "2")

    assert RuntimeConfig(threads=8).max_workers() == 2
    assert RuntimeConfig(threads=1).max_workers() == 1


def test_bad_thread_environment(monkeypatch):
    monkeypatch.setenv("SIGLO_THREADS", "many")

    with pytest.raises(ValueError):
        RuntimeConfig(threads=2).max_workers()


def test_constant_lookup():
    constants = ConstantsConfig()

    assert constants.get(1) == 0.25
    assert constants.get(3) is None
    assert constants.get(4) is None
