"""All unit tests for the command line interface are defined here."""

import json

import pytest
from click.testing import CliRunner

from siglo.__main__ import cli
from siglo.services.impl import validator as validator_module
from siglo.services.impl.validator import Check


@pytest.fixture
def runner(monkeypatch) -> CliRunner:
    monkeypatch.setenv("SIGLO_THREADS", "1")
    monkeypatch.delenv("CONFIG_PATH", raising=False)
    return CliRunner()


def test_example_command(runner, tmp_path):
    result = runner.invoke(cli, ["example", "fermat-weber-4.6", "-o", str(tmp_path)])

    assert result.exit_code == 0, result.output
    assert "fermat-weber-4.6: solve_k finished, seed 0" in result.output
    assert json.loads((tmp_path / "results.json").read_text())["results"]["value"]["value"] == -14.0


def test_example_reruns_are_byte_identical(runner, tmp_path):
    runner.invoke(cli, ["example", "fermat-weber-4.6", "-o", str(tmp_path / "a")])
    runner.invoke(cli, ["example", "fermat-weber-4.6", "-o", str(tmp_path / "b")])

    assert (tmp_path / "a" / "results.json").read_bytes() == (tmp_path / "b" / "results.json").read_bytes()


def test_unknown_example_is_a_usage_error(runner):
    result = runner.invoke(cli, ["example", "missing"])

    assert result.exit_code == 2


def test_invalid_scenario_exits_with_2(runner, tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("name: bad\nseed: 0\ntask:\n  kind: theta\n  n: 7\n  k: 4\n", encoding="utf-8")

    result = runner.invoke(cli, ["run", str(path), "-o", str(tmp_path / "out")])

    assert result.exit_code == 2
    assert f"error: {path}:5: task.theta.n" in result.output


def test_run_command(runner, tmp_path):
    path = tmp_path / "theta.yaml"
    path.write_text(
        "name: theta\nseed: 0\ntask: {kind: theta, n: 1, k: 8, restarts: 1, grid_res: 256}\n", encoding="utf-8"
    )

    result = runner.invoke(cli, ["run", str(path), "-o", str(tmp_path / "out")])

    assert result.exit_code == 0, result.output
    assert (tmp_path / "out" / "results.json").exists()


def test_existence_hypothesis_exit_code(runner, tmp_path):
    path = tmp_path / "heavy-minus.yaml"
    path.write_text(
        "name: heavy-minus\nseed: 0\n"
        "measure:\n  plus: {atoms: [{location: [1.0], weight: 1.0}]}\n"
        "  minus: {atoms: [{location: [0.0], weight: 2.0}]}\n"
        "task: {kind: solve_k, k: 1}\n",
        encoding="utf-8",
    )

    result = runner.invoke(cli, ["run", str(path), "-o", str(tmp_path / "out")])

    assert result.exit_code == 3
    assert "Existence hypothesis violated" in result.output


def test_validate_single_check(runner, tmp_path):
    result = runner.invoke(cli, ["validate", "--check", "nonexistence", "-o", str(tmp_path)])

    assert result.exit_code == 0, result.output
    assert "pass  nonexistence" in result.output


def test_validate_with_wrong_constant_fails(runner, tmp_path):
    result = runner.invoke(cli, ["validate", "--check", "theta-1d", "--theta1", "0.3", "-o", str(tmp_path)])

    assert result.exit_code == 1
    assert "fail  theta-1d" in result.output


def test_validate_quick_skips_long_checks(runner, tmp_path, mocker):
    checks = (Check("fast", lambda _context: (True, "ok")), Check("slow", lambda _context: (True, "ok"), heavy=True))
    mocker.patch.object(validator_module, "CHECKS", checks)

    quick = runner.invoke(cli, ["validate", "--quick", "-o", str(tmp_path / "quick")])
    full = runner.invoke(cli, ["validate", "-o", str(tmp_path / "full")])

    assert quick.exit_code == 0, quick.output
    assert "skipped  slow  long check, run without --quick" in quick.output
    assert full.exit_code == 0, full.output
    assert "pass  slow  ok" in full.output


def test_theta_command(runner, tmp_path):
    result = runner.invoke(
        cli, ["theta", "--n", "1", "--k", "8", "--restarts", "1", "--grid-res", "256", "-o", str(tmp_path)]
    )

    assert result.exit_code == 0, result.output
    assert "theta_1 ~ 0.250000 (k = 8)" in result.output
