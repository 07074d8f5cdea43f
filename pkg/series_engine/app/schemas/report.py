"""Verification report schemas."""

from __future__ import annotations

import enum
from collections import Counter

from pydantic import BaseModel, Field


class CheckStatus(str, enum.Enum):
    MATCH = "match"
    DIFF = "diff"
    SKIPPED_BUDGET = "skipped-budget"
    EXPECTED_OPEN_QUESTION = "expected-open-question"
    INFO = "info"


class CheckRecord(BaseModel):
    id: str
    anchor: str  # section / statement the check exercises
    status: CheckStatus
    left: list[str] = Field(default_factory=list)
    right: list[str] = Field(default_factory=list)
    dims: dict[str, int | str] = Field(default_factory=dict)
    casimirs: dict[str, str] = Field(default_factory=dict)
    note: str = ""
    elapsed_seconds: float = 0.0


class Report(BaseModel):
    suite: str
    records: list[CheckRecord] = Field(default_factory=list)

    @property
    def has_diff(self) -> bool:
        return any(r.status is CheckStatus.DIFF for r in self.records)

    def summary(self) -> dict[str, int]:
        counts = Counter(r.status.value for r in self.records)
        return {status.value: counts.get(status.value, 0) for status in CheckStatus}

    def extend(self, records: list[CheckRecord]) -> None:
        self.records.extend(records)


class QuadricCasimirRow(BaseModel):
    algebra: str
    weight: str
    quadric: str
    tau: str
    dim_q: int
    direct: str
    stated: str
    proof: str
    adjoint: str | None = None
    matches: list[str] = Field(default_factory=list)


class ExtremalRow(BaseModel):
    algebra: str
    weight: str
    k: int
    theta_formula: str
    theta_bruteforce: str | None = None
    predicted: list[str] = Field(default_factory=list)
    eigenspace: list[str] = Field(default_factory=list)
    agrees: bool | None = None
    note: str = ""


class DecompositionRow(BaseModel):
    algebra: str
    weight: str
    multiplicity: int
    dim: int
    casimir_highest_root: str
    casimir_killing: str


class InducedRow(BaseModel):
    algebra: str
    weight: str
    method: str
    subdiagram: str
    induced: str
    dim: int | None = None
    verified: bool | None = None
    note: str = ""
