"""Exceptions connected with scenario configuration files are defined here."""

from siglo.exceptions.base import SigloError


class ScenarioConfigError(SigloError):
    """Exception to raise when a scenario file can not be parsed or validated."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.message = message
        self.line = line
        self.source = source
        super().__init__()

    def __str__(self) -> str:
        location = self.source or "scenario"
        if self.line is not None:
            location = f"{location}:{self.line}"
        return f"{location}: {self.message}"

    def get_exit_code(self) -> int:
        return 2


class UnknownExampleError(SigloError):
    """Exception to raise when a built-in scenario name is not known."""

    def __init__(self, name: str, known: list[str]):
        self.name = name
        self.known = known
        super().__init__()

    def __str__(self) -> str:
        return f"Unknown built-in example '{self.name}', available: {', '.join(self.known)}"

    def get_exit_code(self) -> int:
        return 2
