"""
Core module for the readcodes toolkit
"""

from .logger import setup_logger, get_logger, VerificationLogger
from .exceptions import (
    ReadCodeError,
    ValidationError,
    ConfigurationError,
    AnalysisError,
    BudgetExceeded
)

__all__ = [
    'setup_logger',
    'get_logger',
    'VerificationLogger',
    'ReadCodeError',
    'ValidationError',
    'ConfigurationError',
    'AnalysisError',
    'BudgetExceeded'
]
