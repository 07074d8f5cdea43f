"""
Tests for the job pool and the verification suite.
Run: pytest tests/ -v
"""

from __future__ import annotations

import pytest

from app.errors import BudgetExceededError, InductionError, SeriesDataError
from app.schemas.report import CheckRecord, CheckStatus
from app.services.jobs import Job, run_job, run_jobs
from app.tasks.verify import BATTERIES, Selection, build_jobs, run_battery, run_verification


def _ok(label: str) -> list[CheckRecord]:
    return [CheckRecord(id=label, anchor="test", status=CheckStatus.MATCH)]


def _over_budget() -> list[CheckRecord]:
    raise BudgetExceededError("test plethysm", 10, 5)


def _broken() -> list[CheckRecord]:
    raise InductionError("chain does not join the supports")


class TestRunJob:
    """Engine errors become records."""

    def test_passes_records_through(self):
        records = run_job(Job("ok", _ok, {"label": "first"}))
        assert [r.id for r in records] == ["first"]

    def test_budget_becomes_a_skip(self):
        (record,) = run_job(Job("heavy", _over_budget))
        assert record.id == "heavy"
        assert record.status is CheckStatus.SKIPPED_BUDGET
        assert "exceeds budget 5" in record.note

    def test_engine_error_becomes_a_diff(self):
        (record,) = run_job(Job("broken", _broken))
        assert record.status is CheckStatus.DIFF
        assert record.note.startswith("InductionError")

    def test_submission_order(self):
        jobs = [Job(f"j{i}", _ok, {"label": f"r{i}"}) for i in range(4)]
        results = run_jobs(jobs, n_jobs=1)
        assert [records[0].id for records in results] == ["r0", "r1", "r2", "r3"]


class TestBuildJobs:
    """Resolving a selection into jobs."""

    def test_battery(self):
        jobs = build_jobs(Selection(identities=["vogel-dim"]))
        assert [j.name for j in jobs] == ["vogel-dim"]

    def test_series_rows(self):
        jobs = build_jobs(Selection(series=["exceptional"], m=["1", "-2/3"]))
        assert [j.name for j in jobs] == ["exceptional/m=-2/3", "exceptional/m=1"]

    def test_tabled_identity_found_in_every_series(self):
        names = [j.name for j in build_jobs(Selection(identities=["vogel-ext2-g"], m=["1"]))]
        assert names == ["exceptional/m=1", "subexceptional/m=1"]

    def test_everything(self):
        jobs = build_jobs(Selection(everything=True))
        names = {j.name for j in jobs}
        assert set(BATTERIES) <= names
        assert "severi/m=8" in names

    def test_unknown_identity(self):
        with pytest.raises(SeriesDataError, match="no-such-check"):
            build_jobs(Selection(identities=["no-such-check"]))

    def test_empty_selection(self):
        with pytest.raises(SeriesDataError):
            build_jobs(Selection())

    def test_unknown_battery(self):
        with pytest.raises(SeriesDataError):
            run_battery("no-such-battery")


class TestRunVerification:
    """The suite end to end on cheap checks."""

    def test_vogel_dimensions(self):
        report = run_verification(Selection(identities=["vogel-dim", "magic-square"]), n_jobs=1)
        assert report.suite == "vogel-dim,magic-square"
        assert not report.has_diff
        assert report.summary()["match"] == len(report.records)

    def test_single_identity(self):
        report = run_verification(
            Selection(series=["exceptional"], m=["2"], identities=["vogel-ext2-g"]),
            n_jobs=1,
        )
        assert [r.id for r in report.records] == ["exceptional/m=2/vogel-ext2-g"]
        assert report.records[0].status is CheckStatus.MATCH
