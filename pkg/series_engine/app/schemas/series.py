"""On-disk shape of the series tables (app/series/data/*.json)."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator


class RoleTermModel(BaseModel):
    weight: list[int]
    sign: Literal[1, -1] = 1
    # "orbit": expand over the entry's diagram symmetries, "rho": the 2-dimensional S3 isotypic copy
    tag: Literal["", "orbit", "rho"] = ""


class SeriesEntryModel(BaseModel):
    m: str
    algebra: str
    label: str = ""
    symmetry: list[list[int]] = Field(default_factory=list)  # node permutations, 1-based
    roles: dict[str, list[RoleTermModel]]
    corrections: dict[str, str] = Field(default_factory=dict)  # role -> what the printed table says

    @field_validator("symmetry")
    @classmethod
    def _permutations(cls, value: list[list[int]]) -> list[list[int]]:
        for perm in value:
            if sorted(perm) != list(range(1, len(perm) + 1)):
                raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
        return value


class IdentityModel(BaseModel):
    id: str
    anchor: str
    lhs: str
    rhs: list[str]
    kind: Literal["equal", "contains", "residual"] = "equal"
    m: list[str] | None = None
    residual_roles: int = 0
    expected: Literal["match", "open-question"] = "match"
    note: str = ""

    @model_validator(mode="after")
    def _residual(self) -> IdentityModel:
        if self.kind == "residual" and self.residual_roles < 1:
            raise ValueError(f"{self.id}: a residual identity names at least one unresolved role")
        return self


class GeneratorModel(BaseModel):
    degree: int = Field(ge=0)
    role: str = "1"
    sign: Literal[1, -1] = 1


class BranchModel(BaseModel):
    coefficient: int = 1
    generators: list[GeneratorModel] = Field(default_factory=list)


class GFModel(BaseModel):
    id: str
    anchor: str
    m: list[str] | None = None
    numerator: list[GeneratorModel] = Field(default_factory=lambda: [GeneratorModel(degree=0)])
    denominator: list[GeneratorModel]
    branches: list[BranchModel] = Field(default_factory=lambda: [BranchModel()])
    symmetrize: bool = False
    max_degree: dict[str, int] = Field(default_factory=dict)  # m -> truncation
    note: str = ""

    @field_validator("denominator")
    @classmethod
    def _positive(cls, value: list[GeneratorModel]) -> list[GeneratorModel]:
        if any(g.degree < 1 for g in value):
            raise ValueError("denominator generators need positive degree")
        return value


class SeriesFileModel(BaseModel):
    series: str
    version: int
    numbering: str
    notes: list[str] = Field(default_factory=list)
    entries: list[SeriesEntryModel]
    identities: list[IdentityModel] = Field(default_factory=list)
    generating_functions: list[GFModel] = Field(default_factory=list)
