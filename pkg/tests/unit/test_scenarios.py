"""All unit tests for scenario files and built-in scenarios are defined here."""

import pytest

from siglo.exceptions.config import ScenarioConfigError, UnknownExampleError
from siglo.scenarios import builtin_names, builtin_scenario, load_scenario, parse_scenario
from siglo.schemas import Scenario

FERMAT_WEBER = """\
name: fw
seed: 0
measure:
  plus:
    atoms:
      - {location: [1.0], weight: 2.0}
      - {location: [8.0], weight: 6.0}
  minus:
    atoms:
      - {location: [0.0], weight: 1.0}
      - {location: [4.0], weight: 4.0}
task:
  kind: solve_k
  solver: brute_force
  k: 2
  candidate_grid: {lower: [0.0], upper: [8.0], resolution: [17]}
"""


def test_valid_scenario():
    scenario = parse_scenario(FERMAT_WEBER)

    assert scenario.task.kind == "solve_k"
    assert scenario.dimension == 1
    assert len(scenario.measure.to_measure(1).signed_nodes) == 4


def test_json_is_accepted():
    scenario = parse_scenario('{"name": "t", "seed": 1, "task": {"kind": "theta", "n": 1, "k": 4}}')

    assert scenario.task.grid_res == 256


def test_invalid_value_reports_its_line():
    with pytest.raises(ScenarioConfigError) as error:
        parse_scenario(FERMAT_WEBER.replace("k: 2", "k: 0"), source="fw.yaml")

    assert error.value.line == 15
    assert str(error.value).startswith("fw.yaml:15: task.solve_k.k")
    assert error.value.get_exit_code() == 2


def test_unknown_key_reports_its_line():
    text = FERMAT_WEBER.replace("  solver: brute_force\n", "  solver: brute_force\n  restartz: 3\n")

    with pytest.raises(ScenarioConfigError) as error:
        parse_scenario(text)

    assert error.value.line == 15
    assert "restartz" in error.value.message


def test_broken_yaml_reports_its_line():
    with pytest.raises(ScenarioConfigError) as error:
        parse_scenario("name: t\nseed: [0\ntask: {}\n")

    assert error.value.line is not None
    assert error.value.message.startswith("invalid YAML")


def test_top_level_must_be_a_mapping():
    with pytest.raises(ScenarioConfigError) as error:
        parse_scenario("- 1\n- 2\n")

    assert error.value.line == 1


def test_bad_density_expression_reports_its_line():
    text = """\
name: t
seed: 0
measure:
  plus:
    densities:
      - lower: [0.0]
        upper: [1.0]
        resolution: [10]
        expression: "os.system('ls')"
task: {kind: solve_k, k: 1}
"""
    with pytest.raises(ScenarioConfigError) as error:
        parse_scenario(text)

    assert error.value.line == 9
    assert "unknown names" in error.value.message


def test_dimension_mismatch():
    with pytest.raises(ScenarioConfigError) as error:
        parse_scenario(FERMAT_WEBER.replace("seed: 0", "seed: 0\ndimension: 2"))

    assert "coordinates" in error.value.message


def test_region_task_needs_one_start():
    text = "name: t\nseed: 0\nmeasure: {plus: {atoms: [{location: [1.0], weight: 1.0}]}}\ntask: {kind: region}\n"

    with pytest.raises(ScenarioConfigError) as error:
        parse_scenario(text)

    assert "exactly one of" in error.value.message


def test_measure_is_required_by_solve_k():
    with pytest.raises(ScenarioConfigError):
        parse_scenario("name: t\nseed: 0\ntask: {kind: solve_k, k: 2}\n")


def test_load_from_file(tmp_path):
    path = tmp_path / "fw.yaml"
    path.write_text(FERMAT_WEBER, encoding="utf-8")

    assert load_scenario(path).name == "fw"


def test_missing_file(tmp_path):
    with pytest.raises(ScenarioConfigError):
        load_scenario(tmp_path / "absent.yaml")


@pytest.mark.parametrize("name", builtin_names())
def test_builtin_scenarios_are_valid(name):
    scenario = builtin_scenario(name)

    assert isinstance(scenario, Scenario)
    assert scenario.name == name


def test_unknown_builtin():
    with pytest.raises(UnknownExampleError) as error:
        builtin_scenario("missing")

    assert error.value.get_exit_code() == 2


def test_builtin_catalogue_names():
    assert builtin_names() == [
        "canonical-4.4",
        "certificates-1d",
        "fermat-weber-4.6",
        "gamma-1d",
        "gamma-2d",
        "nonexistence-3.2",
        "theta-1d",
    ]
