# Path: src/core/__init__.py
from .config import settings
from .errors import SolvopsError
from .logging_config import setup_logging

__all__ = ["settings", "setup_logging", "SolvopsError"]
