"""
Logging Configuration

Rotating log files plus a console handler. The console goes to stderr
because stdout carries the command reports.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional


def setup_logging(
    log_dir: Optional[str] = "logs",
    log_level: str = "WARNING",
    max_bytes: int = 10 * 1024 * 1024,  # 10MB
    backup_count: int = 5,
    console: bool = True,
):
    """Configure logging for gsemi.

    Args:
        log_dir: Directory for ``gsemi.log`` and ``gsemi-error.log``;
            ``None`` disables the file handlers
        log_level: Console level (DEBUG, INFO, WARNING, ERROR)
        max_bytes: Max size of each log file before rotation
        backup_count: Number of old log files to keep
        console: Attach the stderr handler

    Example:
        >>> setup_logging(log_level="DEBUG")
        >>> logger = logging.getLogger(__name__)
        >>> logger.info("Knitting started")
    """
    level = getattr(logging, log_level.upper(), None)
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level: {log_level}")

    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        root_logger.removeHandler(handler)
        handler.close()
    root_logger.setLevel(logging.DEBUG if log_dir else level)

    # Example: 2026-10-18 14:30:15 - src.repcat.components - INFO - Component knitted
    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    if log_dir:
        Path(log_dir).mkdir(parents=True, exist_ok=True)

        file_handler = RotatingFileHandler(
            filename=f"{log_dir}/gsemi.log",
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding="utf-8",
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(logging.DEBUG)
        root_logger.addHandler(file_handler)

        error_handler = RotatingFileHandler(
            filename=f"{log_dir}/gsemi-error.log",
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding="utf-8",
        )
        error_handler.setFormatter(formatter)
        error_handler.setLevel(logging.ERROR)
        root_logger.addHandler(error_handler)

    if console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        console_handler.setLevel(level)
        root_logger.addHandler(console_handler)

    logging.getLogger(__name__).debug(f"Logging initialized: level={log_level}, dir={log_dir}")


def get_logger(name: str) -> logging.Logger:
    """Get a logger with the given name.

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("Parsing started")
    """
    return logging.getLogger(name)


if __name__ == "__main__":
    print("\n=== Logging Test ===\n")

    setup_logging(log_level="DEBUG")

    logger = get_logger("test")
    logger.debug("This is a debug message")
    logger.info("This is an info message")
    logger.warning("This is a warning message")
    logger.error("This is an error message")

    print("\nCheck logs/ directory for output files:")
    print("  - gsemi.log (all messages)")
    print("  - gsemi-error.log (errors only)")
    print("\n✓ Logging test complete")
