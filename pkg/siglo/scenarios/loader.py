"""Scenario files (YAML or JSON) are loaded here; every error is reported with the line it comes from."""

from collections.abc import Sequence
from pathlib import Path

import yaml
from pydantic import ValidationError

from siglo.exceptions.config import ScenarioConfigError
from siglo.exceptions.logic.measure import InvalidMeasureError
from siglo.measure.expressions import compile_expression
from siglo.schemas import Scenario


def _line_of(root: yaml.Node | None, loc: Sequence[str | int]) -> int | None:
    """1-based line of the deepest node of `root` reachable by `loc`; keys absent from the document are skipped."""
    if root is None:
        return None
    node = root
    for key in loc:
        child = None
        if isinstance(node, yaml.MappingNode):
            child = next((value for name, value in node.value if name.value == str(key)), None)
        elif isinstance(node, yaml.SequenceNode) and isinstance(key, int) and 0 <= key < len(node.value):
            child = node.value[key]
        if child is not None:
            node = child
    return node.start_mark.line + 1


def _check_expressions(scenario: Scenario, root: yaml.Node | None, source: str) -> None:
    if scenario.measure is None:
        return
    for part in ("plus", "minus"):
        for i, density in enumerate(getattr(scenario.measure, part).densities):
            if density.expression is None:
                continue
            try:
                compile_expression(density.expression, scenario.dimension)
            except InvalidMeasureError as exc:
                line = _line_of(root, ("measure", part, "densities", i, "expression"))
                raise ScenarioConfigError(str(exc), line, source) from exc


def parse_scenario(text: str, source: str = "scenario") -> Scenario:
    """Validate a scenario document given as YAML (JSON is a subset) text."""
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        line = exc.problem_mark.line + 1 if exc.problem_mark is not None else None
        raise ScenarioConfigError(f"invalid YAML: {exc.problem}", line, source) from exc
    except yaml.YAMLError as exc:
        raise ScenarioConfigError(f"invalid YAML: {exc}", None, source) from exc

    if not isinstance(data, dict):
        raise ScenarioConfigError("top level of a scenario must be a mapping", 1, source)
    try:
        scenario = Scenario.model_validate(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        where = ".".join(str(part) for part in error["loc"]) or "scenario"
        raise ScenarioConfigError(f"{where}: {error['msg']}", _line_of(root, error["loc"]), source) from exc
    _check_expressions(scenario, root, source)
    return scenario


def load_scenario(path: str | Path) -> Scenario:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioConfigError(f"cannot read scenario file: {exc.strerror}", None, str(path)) from exc
    return parse_scenario(text, source=str(path))
