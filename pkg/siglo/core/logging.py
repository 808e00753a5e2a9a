"""Logging configuration functions are defined here."""

import logging
import sys
from pathlib import Path
from typing import Literal

import structlog

LoggingLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

_LEVEL_NAME_MAPPING = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


def configure_logging(
    log_level: LoggingLevel, files: dict[str, LoggingLevel] | None = None, run_log_level: LoggingLevel = "DEBUG"
) -> structlog.stdlib.BoundLogger:
    """Configure structlog: colored console output to stderr and jsonlines output for every given file.

    The console handler filters at `log_level`; the application and root loggers pass everything any handler
    (console, configured files or the per-run log at `run_log_level`) accepts.
    """
    files = files or {}
    threshold = min(_LEVEL_NAME_MAPPING[level] for level in (log_level, run_log_level, *files.values()))

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    logger: structlog.stdlib.BoundLogger = structlog.get_logger("siglo")
    logger.setLevel(threshold)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(processor=structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()))
    )
    console_handler.setLevel(_LEVEL_NAME_MAPPING[log_level])

    root_logger = logging.getLogger()
    root_logger.addHandler(console_handler)

    for filename, level in files.items():
        attach_file_handler(filename, level)

    root_logger.setLevel(threshold)

    return logger


def attach_file_handler(filename: str | Path, level: LoggingLevel = "DEBUG") -> logging.Handler:
    """Add a jsonlines file handler to the root logger and return it so the caller can detach it later."""
    Path(filename).parent.mkdir(parents=True, exist_ok=True)
    file_handler = logging.FileHandler(filename=str(filename), encoding="utf-8")
    file_handler.setFormatter(structlog.stdlib.ProcessorFormatter(processor=structlog.processors.JSONRenderer()))
    file_handler.setLevel(_LEVEL_NAME_MAPPING[level])
    logging.getLogger().addHandler(file_handler)
    return file_handler


def detach_handler(handler: logging.Handler) -> None:
    """Remove a handler previously added by `attach_file_handler` and close its stream."""
    logging.getLogger().removeHandler(handler)
    handler.close()
