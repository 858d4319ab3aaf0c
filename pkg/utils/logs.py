"""
Console logging setup shared by the CLI and the test suite.
Component tags live in the messages themselves ("[Prover] ...").
"""

import logging
import sys

COLORS = {
    logging.DEBUG: "\033[2m",
    logging.INFO: "\033[36m",
    logging.WARNING: "\033[33m",
    logging.ERROR: "\033[31m",
}
RESET = "\033[0m"


class LevelColorFormatter(logging.Formatter):
    def __init__(self, fmt, datefmt=None, color=True):
        super().__init__(fmt, datefmt)
        self.color = color

    def format(self, record):
        line = super().format(record)
        if not self.color:
            return line
        return f"{COLORS.get(record.levelno, '')}{line}{RESET}"


def setup_logging(level: str = "INFO", color: bool = True, stream=None):
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(LevelColorFormatter(
        "%(asctime)s [%(levelname)8s] %(message)s", "%Y-%m-%d %H:%M:%S", color=color))
    root = logging.getLogger()
    for existing in list(root.handlers):
        if getattr(existing, "_tentacle", False):
            root.removeHandler(existing)
    handler._tentacle = True
    root.addHandler(handler)
    root.setLevel(getattr(logging, level.upper(), logging.INFO))
    return handler
