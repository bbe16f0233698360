"""
Utility Modules for gsemi

Provides logging setup, the error hierarchy and matrix dumping.
"""

from .data_manager import MatrixDumper
from .errors import GsemiError, OracleInconclusive
from .logger import get_logger, setup_logging

__all__ = ['setup_logging', 'get_logger', 'MatrixDumper', 'GsemiError', 'OracleInconclusive']
