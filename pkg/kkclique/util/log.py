"""Logging helpers. The library only creates loggers; the CLI installs the handler."""
import logging
import sys

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def configure_logging(level: str = "WARNING") -> None:
    """
    Send kkclique log records to stderr at the given level.

    Args:
        level: str
            A logging level name such as ``"INFO"`` or ``"DEBUG"``
    """
    root = logging.getLogger("kkclique")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level.upper())
    root.propagate = False
