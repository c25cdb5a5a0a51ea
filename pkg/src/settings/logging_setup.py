"""
Logger factory shared by all packages
"""

import logging
from typing import Optional

from .config import get_log_level

_configured = False


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Get a module logger, configuring the root handler on first use

    Args:
        name: Logger name, usually __name__
        level: Override for DGS_LOG_LEVEL

    Returns:
        Logger instance
    """
    global _configured
    if not _configured:
        logging.basicConfig(
            level=get_log_level(level),
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
        _configured = True
    return logging.getLogger(name)
