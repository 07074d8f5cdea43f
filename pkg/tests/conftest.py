"""Shared test configuration and fixtures."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

# Ensure the engine root is on sys.path so `app.*` resolves
ENGINE_ROOT = Path(__file__).resolve().parent.parent / "series_engine"
if str(ENGINE_ROOT) not in sys.path:
    sys.path.insert(0, str(ENGINE_ROOT))


@pytest.fixture(autouse=True)
def fresh_settings():
    """Command-line overrides mutate the cached settings; start every test from defaults."""
    from app.config import get_settings

    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rs_factory():
    from app.lie.rootsys import build_root_system

    return build_root_system
