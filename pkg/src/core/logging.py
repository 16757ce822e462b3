"""
Logging configuration for the fivec-drawing toolkit.
"""

import logging
import sys
from typing import Optional

from src.core.config import get_settings

LOGGER_NAME = "fivec"

def setup_logging(log_level: Optional[str] = None) -> logging.Logger:
    """
    Configure logging for the toolkit.

    Command output goes to stdout, so log records are written to stderr
    and, when FIVEC_LOG_FILE is set, appended to that file.

    Args:
        log_level: Optional override for log level from settings

    Returns:
        Logger instance for the toolkit
    """
    settings = get_settings()
    level = (log_level or settings.FIVEC_LOG_LEVEL).upper()

    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)

    # Clear existing handlers to avoid duplicates
    if logger.handlers:
        logger.handlers.clear()

    formatter = logging.Formatter(
        "%(asctime)s - %(levelname)s - %(message)s"
    )

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if settings.FIVEC_LOG_FILE:
        file_handler = logging.FileHandler(settings.FIVEC_LOG_FILE, mode="a")
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.propagate = False
    return logger
