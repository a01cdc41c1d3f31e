"""
Logging configuration for the readcodes toolkit
"""
import logging
import logging.handlers
import os
from typing import Any, Dict, Optional

ROOT_LOGGER = "readcodes"


def setup_logger(
    name: str = ROOT_LOGGER,
    log_file: Optional[str] = None,
    level: str = "INFO",
    max_bytes: int = 10 * 1024 * 1024,  # 10MB
    backup_count: int = 5
) -> logging.Logger:
    """
    Set up a logger with a console handler and an optional rotating file handler

    Args:
        name: Logger name
        log_file: Path to log file, or None/empty for console-only logging
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        max_bytes: Maximum size of log file before rotation
        backup_count: Number of backup files to keep

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))
    logger.handlers.clear()
    logger.propagate = False

    detailed_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(module)s:%(funcName)s:%(lineno)d - %(message)s'
    )
    simple_formatter = logging.Formatter('%(levelname)s - %(message)s')

    # Standard output carries machine-readable results only
    console_handler = logging.StreamHandler()
    console_handler.setLevel(getattr(logging, level.upper(), logging.INFO))
    console_handler.setFormatter(simple_formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)

        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=max_bytes,
            backupCount=backup_count
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(detailed_formatter)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger inside the readcodes hierarchy

    Module names such as ``src.codes.codebook`` become ``readcodes.src.codes.codebook``
    so they inherit the handlers installed by setup_logger.
    """
    if name is None:
        return logging.getLogger(ROOT_LOGGER)
    if name == ROOT_LOGGER or name.startswith(ROOT_LOGGER + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


class VerificationLogger:
    """Specialized logger for exhaustive verification activity"""

    def __init__(self, logger_name: str = f"{ROOT_LOGGER}.verification"):
        self.logger = get_logger(logger_name)

    def log_sweep_start(self, check: str, instances: int):
        """Log the start of a sweep"""
        self.logger.info(f"SWEEP - {check} - {instances} instance(s)")

    def log_instance(self, check: str, params: Dict[str, Any], pairs: int, passed: bool):
        """Log one grid instance"""
        status = "pass" if passed else "FAIL"
        self.logger.debug(f"INSTANCE - {check} - {params} - pairs: {pairs:,} - {status}")

    def log_counterexample(self, check: str, x: str, y: str, details: Dict[str, Any]):
        """Log the reported counterexample"""
        self.logger.warning(f"COUNTEREXAMPLE - {check} - x={x} y={y} - {details}")

    def log_result(self, check: str, passed: bool, pairs: int):
        """Log the final verdict"""
        verdict = "PASS" if passed else "FAIL"
        self.logger.info(f"RESULT - {check} - {verdict} - {pairs:,} pair(s) examined")
