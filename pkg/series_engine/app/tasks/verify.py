"""
Verification suite: orchestrates table checks and batteries into one report.

Steps:
1. Resolve the selection (series, m values, identity or battery ids)
2. Build one job per table entry and one per battery
3. Run the jobs inline or through the joblib pool
4. Collect the records into a Report, in submission order
5. Log the summary
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

import structlog

from app.errors import SeriesDataError
from app.extremal.checks import BATTERIES as EXTREMAL_BATTERIES
from app.schemas.report import CheckRecord, Report
from app.series.formulas import parse_m
from app.series.tables import available_series, load_series
from app.series.verify import BATTERIES as SERIES_BATTERIES
from app.series.verify import verify_table
from app.services.jobs import Job, run_jobs

logger = structlog.get_logger()

BATTERIES = {**SERIES_BATTERIES, **EXTREMAL_BATTERIES}


@dataclass
class Selection:
    series: list[str] = field(default_factory=list)
    m: list[str] = field(default_factory=list)
    identities: list[str] = field(default_factory=list)
    everything: bool = False

    @property
    def m_values(self) -> list[Fraction] | None:
        return [parse_m(x) for x in self.m] or None


def run_battery(name: str, **kwargs) -> list[CheckRecord]:
    if name not in BATTERIES:
        raise SeriesDataError(f"unknown battery {name!r}; expected one of {', '.join(BATTERIES)}")
    logger.info("battery_started", battery=name)
    return BATTERIES[name](**kwargs)


def _table_ids(series: str, data_path: str | None) -> set[str]:
    table = load_series(series, data_path)
    return {i.id for i in table.identities} | {g.id for g in table.generating_functions}


def _entry_jobs(series: str, ms: list[Fraction] | None, identities: list[str] | None, budget, data_path) -> list[Job]:
    jobs = []
    for entry in load_series(series, data_path).entries:
        if ms is not None and entry.m not in ms:
            continue
        jobs.append(
            Job(
                name=f"{series}/m={entry.m}",
                fn=verify_table,
                kwargs={"series": series, "m": [entry.m], "identities": identities, "budget": budget, "data_path": data_path},
            )
        )
    return jobs


def _battery_job(name: str, budget, data_path, n_max) -> Job:
    return Job(name=name, fn=run_battery, kwargs={"name": name, "budget": budget, "data_path": data_path, "n_max": n_max})


def build_jobs(
    selection: Selection,
    budget: int | None = None,
    data_path: str | None = None,
    n_max: int | None = None,
) -> list[Job]:
    """
    ``--all`` selects every table and battery. Otherwise identity ids name a
    battery or a tabled identity / generating function; tabled ids are looked
    up in the selected series, or in every series when none is selected.
    """
    if selection.everything:
        jobs = []
        for series in available_series(data_path):
            jobs.extend(_entry_jobs(series, None, None, budget, data_path))
        jobs.extend(_battery_job(name, budget, data_path, n_max) for name in BATTERIES)
        return jobs

    ms = selection.m_values
    batteries = [i for i in selection.identities if i in BATTERIES]
    tabled = [i for i in selection.identities if i not in BATTERIES]
    series_list = selection.series or (available_series(data_path) if tabled else [])

    jobs = []
    unmatched = set(tabled)
    for series in series_list:
        ids = _table_ids(series, data_path)
        if tabled:
            wanted = [i for i in tabled if i in ids]
            unmatched -= set(wanted)
            if not wanted:
                continue
            jobs.extend(_entry_jobs(series, ms, wanted, budget, data_path))
        else:
            jobs.extend(_entry_jobs(series, ms, None, budget, data_path))
    if unmatched:
        raise SeriesDataError(f"unknown identity or battery: {', '.join(sorted(unmatched))}")
    jobs.extend(_battery_job(name, budget, data_path, n_max) for name in batteries)
    if not jobs:
        raise SeriesDataError("nothing selected; give --series, --identity or --all")
    return jobs


def run_verification(
    selection: Selection,
    budget: int | None = None,
    data_path: str | None = None,
    n_max: int | None = None,
    n_jobs: int | None = None,
) -> Report:
    start = time.perf_counter()
    jobs = build_jobs(selection, budget=budget, data_path=data_path, n_max=n_max)
    logger.info("verification_started", jobs=len(jobs), everything=selection.everything)
    report = Report(suite="all" if selection.everything else ",".join(j.name for j in jobs))
    for records in run_jobs(jobs, n_jobs=n_jobs):
        report.extend(records)
    logger.info(
        "verification_completed",
        records=len(report.records),
        has_diff=report.has_diff,
        duration=round(time.perf_counter() - start, 2),
        **report.summary(),
    )
    return report
