"""Experiment runner interface is defined here."""

from abc import ABC, abstractmethod
from pathlib import Path

from siglo.schemas import ResultsDocument, Scenario


class ExperimentRunner(ABC):
    """An abstract interface for running one scenario and writing its output directory."""

    @abstractmethod
    def run(self, scenario: Scenario, output_dir: str | Path | None = None) -> ResultsDocument:
        """
        Run the scenario task and write results.json, CSV tables, run.log and metrics into the output directory.

        Args:
            scenario: Validated scenario.
            output_dir: Target directory, defaults to the scenario one or `<runtime.output_dir>/<name>`.

        Returns:
            The document written to results.json.
        """
