# Path: src/core/logging_config.py
import logging
from logging.handlers import RotatingFileHandler

from rich.console import Console
from rich.logging import RichHandler

from src.core.config import settings

__all__ = ["setup_logging"]


def setup_logging(log_level: str = "INFO") -> None:
    """
    Console goes through RichHandler, the file keeps everything at DEBUG
    (path switches of the special functions, oracle nudges, ...).
    """
    # File handler target
    log_dir = settings.LOG_DIR
    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / "solvops.log"

    file_formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    console_formatter = logging.Formatter("%(message)s")

    # 5MB x 3
    file_handler = RotatingFileHandler(
        log_file,
        maxBytes=5 * 1024 * 1024,
        backupCount=3,
        encoding="utf-8"
    )
    file_handler.setFormatter(file_formatter)
    file_handler.setLevel(logging.DEBUG)

    # stderr: stdout carries the CSV/JSON data
    console_handler = RichHandler(
        console=Console(stderr=True),
        rich_tracebacks=True,
        markup=True,
        show_time=False,
        show_path=False
    )
    console_handler.setFormatter(console_formatter)
    console_handler.setLevel(log_level)

    # Root logger takes both handlers
    logging.basicConfig(
        level=logging.DEBUG,
        handlers=[console_handler, file_handler],
        force=True
    )

    # Series/path chatter from the special functions is DEBUG-only noise on
    # the console unless -v is given.
    logging.getLogger("src.special").setLevel(
        logging.DEBUG if log_level == "DEBUG" else logging.INFO
    )
