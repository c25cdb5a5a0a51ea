"""
Configuration for the diagrammatic-set toolkit

Values come from the environment, optionally seeded from a .env file in the
project root. Every getter accepts an explicit override.
"""

import os
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv

# Look for .env in the project root (3 levels up from src/settings/config.py)
env_path = Path(__file__).parent.parent.parent / '.env'
if env_path.exists():
    load_dotenv(dotenv_path=env_path)
else:
    load_dotenv()


DEFAULT_SEARCH_TIMEOUT = 20.0
DEFAULT_ENUMERATION_LIMIT = 40
DEFAULT_LOG_LEVEL = 'WARNING'
DEFAULT_FORMAT_VERSION = '1.0'


def get_search_timeout(timeout: Optional[float] = None) -> float:
    """
    Get the budget for exponential searches

    Args:
        timeout: Seconds. If None, reads DGS_SEARCH_TIMEOUT or uses the default

    Returns:
        Timeout in seconds
    """
    if timeout is None:
        timeout = float(os.getenv('DGS_SEARCH_TIMEOUT', DEFAULT_SEARCH_TIMEOUT))
    return timeout


def get_enumeration_limit(limit: Optional[int] = None) -> int:
    """
    Get the largest shape size accepted by hom-set enumeration

    Args:
        limit: Element count. If None, reads DGS_ENUMERATION_LIMIT or uses the default

    Returns:
        Maximum number of elements
    """
    if limit is None:
        limit = int(os.getenv('DGS_ENUMERATION_LIMIT', DEFAULT_ENUMERATION_LIMIT))
    return limit


def get_log_level(level: Optional[str] = None) -> str:
    if level is None:
        level = os.getenv('DGS_LOG_LEVEL', DEFAULT_LOG_LEVEL)
    return level.upper()


def get_format_version(version: Optional[str] = None) -> str:
    if version is None:
        version = os.getenv('DGS_FORMAT_VERSION', DEFAULT_FORMAT_VERSION)
    return version
