"""
Job pool for independent checks.

Jobs run through joblib and come back in submission order, so a report does not
depend on the worker count. Worker processes start from fresh settings; the
parent's settings are replayed in every job before it runs.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable

import structlog
from joblib import Parallel, delayed

from app.config import get_settings, override_settings
from app.errors import BudgetExceededError, SeriesEngineError
from app.logging_config import bind_run_context, setup_logging
from app.schemas.report import CheckRecord, CheckStatus

logger = structlog.get_logger()


@dataclass(frozen=True)
class Job:
    name: str
    fn: Callable[..., list[CheckRecord]]
    kwargs: dict[str, Any] = field(default_factory=dict)


def run_job(job: Job) -> list[CheckRecord]:
    """Run one job; engine errors become records instead of propagating."""
    start = time.perf_counter()
    try:
        return job.fn(**job.kwargs)
    except BudgetExceededError as e:
        logger.info("job_skipped", job=job.name, what=e.what, estimate=e.estimate, limit=e.limit)
        status, note = CheckStatus.SKIPPED_BUDGET, str(e)
    except SeriesEngineError as e:
        logger.error("check_failed", job=job.name, error=str(e))
        status, note = CheckStatus.DIFF, f"{type(e).__name__}: {e}"
    return [
        CheckRecord(
            id=job.name,
            anchor="job",
            status=status,
            note=note,
            elapsed_seconds=round(time.perf_counter() - start, 3),
        )
    ]


def _run_in_worker(job: Job, settings: dict[str, Any]) -> list[CheckRecord]:
    applied = override_settings(**settings)
    setup_logging(applied.log_level, applied.log_format, stream=sys.stderr)
    bind_run_context("verify", job=job.name)
    return run_job(job)


def run_jobs(jobs: list[Job], n_jobs: int | None = None) -> list[list[CheckRecord]]:
    settings = get_settings()
    n_jobs = n_jobs or settings.jobs
    logger.info("jobs_started", jobs=len(jobs), workers=n_jobs)
    if n_jobs == 1 or len(jobs) < 2:
        return [run_job(job) for job in jobs]
    snapshot = settings.model_dump()
    return Parallel(n_jobs=n_jobs)(delayed(_run_in_worker)(job, snapshot) for job in jobs)
