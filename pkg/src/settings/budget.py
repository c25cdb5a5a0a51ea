"""
Time budget for exponential searches
"""

import time
from typing import Optional

from src.errors import Indeterminate
from .config import get_search_timeout
from .logging_setup import get_logger

logger = get_logger(__name__)


class SearchBudget:
    """Deadline shared by one top-level search and all of its recursive calls"""

    def __init__(self, timeout: Optional[float] = None, label: str = "search"):
        self.timeout = get_search_timeout(timeout)
        self.label = label
        self.deadline = time.monotonic() + self.timeout
        self.steps = 0

    def check(self) -> None:
        """
        Count one search step and abort once the deadline has passed

        Raises:
            Indeterminate: when the budget is exhausted
        """
        self.steps += 1
        if self.steps % 64 == 0 and time.monotonic() > self.deadline:
            logger.warning("%s exceeded %.1fs after %d steps", self.label, self.timeout, self.steps)
            raise Indeterminate(f"{self.label} exceeded its {self.timeout:.1f}s budget", locus=self.steps)
