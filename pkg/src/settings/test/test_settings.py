"""
Tests for configuration getters and the search budget
"""

import os

import pytest

from src.errors import Indeterminate
from src.settings import (
    SearchBudget,
    get_enumeration_limit,
    get_format_version,
    get_log_level,
    get_logger,
    get_search_timeout,
)


def _with_env(name, value, read):
    saved = os.environ.get(name)
    os.environ[name] = value
    try:
        return read()
    finally:
        if saved is None:
            del os.environ[name]
        else:
            os.environ[name] = saved


def test_explicit_values_win():
    assert get_search_timeout(1.5) == 1.5
    assert get_enumeration_limit(12) == 12
    assert get_log_level('debug') == 'DEBUG'
    assert get_format_version('2.0') == '2.0'


def test_environment_values():
    assert _with_env('DGS_ENUMERATION_LIMIT', '7', get_enumeration_limit) == 7
    assert _with_env('DGS_SEARCH_TIMEOUT', '0.25', get_search_timeout) == 0.25
    assert _with_env('DGS_LOG_LEVEL', 'info', get_log_level) == 'INFO'


def test_logger_names():
    assert get_logger('src.maps.core').name == 'src.maps.core'


def test_exhausted_budget_is_indeterminate():
    budget = SearchBudget(timeout=-1.0, label="map search")
    with pytest.raises(Indeterminate):
        for _ in range(64):
            budget.check()
    assert budget.steps == 64


def test_fresh_budget_allows_steps():
    budget = SearchBudget(timeout=60.0)
    for _ in range(200):
        budget.check()
    assert budget.steps == 200


def main():
    """Run the settings checks as a script"""
    print("=" * 60)
    print("SETTINGS CHECKS")
    print("=" * 60)
    checks = [name for name in globals() if name.startswith("test_")]
    failures = 0
    for name in checks:
        try:
            globals()[name]()
            print(f"✓ {name}")
        except Exception as e:
            failures += 1
            print(f"❌ {name}: {e!r}")
    print(f"\n{len(checks) - failures}/{len(checks)} passed")


if __name__ == "__main__":
    main()
