import logging
import logging.config
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from .settings import settings

# Named loggers used across the package; each one propagates to the root handlers.
COMPONENT_LOGGERS = ("GameEngine", "Trainer", "Evaluator", "Checkpoint", "Analysis", "Cli")

RECORD_FORMAT = "%(asctime)s | %(levelname)-7s | %(name)-10s | %(message)s"


def resolve_outputs(log_output: str) -> Sequence[str]:
    """
    Map the ``log_output`` setting onto handler names.

    Raises:
        ValueError: If the setting is not "console", "file" or "both".
    """
    outputs = {"console": ("console",), "file": ("file",), "both": ("console", "file")}
    try:
        return outputs[log_output]
    except KeyError:
        raise ValueError(f"log_output must be console, file or both, got {log_output!r}") from None


def build_config(level: str, outputs: Sequence[str], log_file: Path) -> Dict[str, Any]:
    """Build a ``dictConfig`` mapping for the given level and handler names."""
    handlers: Dict[str, Dict[str, Any]] = {}
    if "console" in outputs:
        handlers["console"] = {
            "class": "logging.StreamHandler",
            "formatter": "records",
            "stream": "ext://sys.stderr",
        }
    if "file" in outputs:
        handlers["file"] = {
            "class": "logging.FileHandler",
            "formatter": "records",
            "filename": str(log_file),
            "mode": "a",
            "encoding": "utf-8",
        }
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {"records": {"format": RECORD_FORMAT}},
        "handlers": handlers,
        "loggers": {name: {"level": level} for name in COMPONENT_LOGGERS},
        "root": {"handlers": list(handlers), "level": "WARNING"},
    }


class Logger:
    """Applies the package logging configuration from settings."""
    DEFAULT_LEVEL = "INFO"

    @classmethod
    def setup(cls, level: Optional[str] = None, log_file: Optional[Path] = None) -> None:
        outputs = resolve_outputs(settings.log_output)
        log_file = log_file or settings.logs_path / "drrn.log"
        if "file" in outputs:
            log_file.parent.mkdir(parents=True, exist_ok=True)
        logging.config.dictConfig(build_config(level or cls.DEFAULT_LEVEL, outputs, log_file))


def setup_logging(verbose: bool = False) -> None:
    Logger.setup(level="DEBUG" if settings.debug or verbose else None)
