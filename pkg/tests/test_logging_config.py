"""
Tests for the engine's logging setup.
Run: pytest tests/ -v
"""

from __future__ import annotations

import io
import json
from fractions import Fraction

import structlog

from app.logging_config import bind_run_context, render_exact_values, setup_logging


class TestExactValues:
    """Rationals and weights in report notation."""

    def test_fraction_and_weight(self):
        event = render_exact_values(None, "info", {"event": "x", "theta": Fraction(100, 3), "tau": (0, 1, 0)})
        assert event == {"event": "x", "theta": "100/3", "tau": "[0,1,0]"}

    def test_nested_and_plain_values(self):
        event = render_exact_values(None, "info", {"weights": [(1, 0), (0, 1)], "flags": (True, False), "n": 3})
        assert event["weights"] == ["[1,0]", "[0,1]"]
        assert event["flags"] == [True, False]
        assert event["n"] == 3


class TestSetup:
    """JSON lines on the diagnostics stream."""

    def test_json_event_carries_run_context(self):
        stream = io.StringIO()
        setup_logging("INFO", "json", stream=stream)
        bind_run_context("verify", job="vogel-dim")
        try:
            structlog.get_logger("series-engine-test").info("check_completed", casimir=Fraction(8, 5), weight=(2, 0))
        finally:
            structlog.contextvars.clear_contextvars()
        record = json.loads(stream.getvalue().splitlines()[-1])
        assert record["event"] == "check_completed"
        assert record["command"] == "verify"
        assert record["job"] == "vogel-dim"
        assert record["casimir"] == "8/5"
        assert record["weight"] == "[2,0]"
        assert record["level"] == "info"

    def test_level_filters(self):
        stream = io.StringIO()
        setup_logging("WARNING", "console", stream=stream)
        structlog.get_logger("series-engine-test").info("hidden")
        assert stream.getvalue() == ""
