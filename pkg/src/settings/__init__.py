"""
Configuration, logging and search-budget utilities
"""

from .config import (
    get_search_timeout,
    get_enumeration_limit,
    get_log_level,
    get_format_version,
)
from .logging_setup import get_logger
from .budget import SearchBudget

__all__ = [
    'get_search_timeout',
    'get_enumeration_limit',
    'get_log_level',
    'get_format_version',
    'get_logger',
    'SearchBudget',
]
