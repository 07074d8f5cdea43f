"""
Series tables: loading, role resolution and role expressions.

A role is a list of marked weights with a sign and a tag. ``orbit`` expands a
weight over the entry's diagram symmetries (the mirror images suppressed in the
printed A₂×A₂ column, the S₃ images of the A₁³ column), ``rho`` counts the
2-dimensional S₃ isotypic copy twice.

Role expressions, used by identities and generating functions::

    term    := [int | "-"] product          "2g", "-g2", "3" (three trivials)
    product := factor ("." factor)*         Cartan product V_λV_μ = V_{λ+μ}
    factor  := name ["^(" k ")"] ["*"]      Cartan power, dual
             | "aad(" product "," product [";" chain] ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import structlog
from pydantic import ValidationError

from app.config import get_settings
from app.errors import InductionError, SeriesDataError
from app.induction.induced import aad_chains, aad_induced
from app.lie.cartan import AlgebraType
from app.lie.chars import Decomposition
from app.lie.rootsys import RootSystem, Weight, build_root_system
from app.schemas.series import GFModel, IdentityModel, SeriesFileModel
from app.series.formulas import parse_m

logger = structlog.get_logger()

TRIVIAL = "1"

_FACTOR_RE = re.compile(r"^(?P<name>[A-Za-z][A-Za-z0-9_']*)(?:\^\((?P<power>\d+)\))?(?P<dual>\*)?$")
_AAD_RE = re.compile(r"^aad\((?P<args>.*)\)(?P<dual>\*)?$")
_TERM_RE = re.compile(r"^(?P<coef>-?\d*)\s*(?P<body>.*)$")


def symmetry_orbit(weight: Weight, perms: tuple[tuple[int, ...], ...]) -> list[Weight]:
    """Images of a weight under the group generated by node permutations (0-based, node i goes to perm[i])."""
    seen = [tuple(weight)]
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for perm in perms:
                image = [0] * len(w)
                for i, c in enumerate(w):
                    image[perm[i]] = c
                image = tuple(image)
                if image not in seen:
                    seen.append(image)
                    nxt.append(image)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class RoleTerm:
    weight: Weight
    sign: int = 1
    tag: str = ""


@dataclass
class SeriesEntry:
    series: str
    m: Fraction
    algebra: AlgebraType
    rs: RootSystem
    roles: dict[str, tuple[RoleTerm, ...]]
    symmetry: tuple[tuple[int, ...], ...] = ()
    label: str = ""
    corrections: dict[str, str] = field(default_factory=dict)

    def __str__(self) -> str:
        return f"{self.series} m={self.m} ({self.algebra})"

    def symmetry_images(self, weight: Weight) -> list[Weight]:
        """Distinct images of ``weight`` under the group generated by the declared permutations."""
        return symmetry_orbit(weight, self.symmetry)

    def role(self, name: str, representative: bool = False) -> Decomposition:
        if name == TRIVIAL:
            return Decomposition.irreducible(self.rs, self.rs.zero())
        if name not in self.roles:
            raise SeriesDataError(f"role {name!r} is not tabled for {self}")
        out: dict[Weight, int] = {}
        for term in self.roles[name]:
            weights = [term.weight] if representative or term.tag != "orbit" else self.symmetry_images(term.weight)
            mult = 2 if term.tag == "rho" and not representative else 1
            for w in weights:
                out[w] = out.get(w, 0) + term.sign * mult
        return Decomposition(self.rs, out)

    def role_weights(self, name: str) -> list[tuple[Weight, int]]:
        """(weight, signed multiplicity) pairs of a tabled role, orbits expanded."""
        return list(self.role(name).terms.items())

    def expression(self, text: str, representative: bool = False) -> Decomposition:
        return evaluate_expression(self, text, representative)


# ----------------------------------------------------------------------
# Expressions
# ----------------------------------------------------------------------


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p.strip() for p in parts]


def cartan_product(a: Decomposition, b: Decomposition) -> Decomposition:
    """Bilinear extension of V_λ·V_μ = V_{λ+μ}."""
    out: dict[Weight, int] = {}
    for lam, m in a.terms.items():
        for mu, n in b.terms.items():
            nu = tuple(x + y for x, y in zip(lam, mu))
            out[nu] = out.get(nu, 0) + m * n
    return Decomposition(a.rs, out)


def cartan_power(a: Decomposition, k: int) -> Decomposition:
    """Termwise Cartan power: every weight scaled by k (the series convention for reducible roles)."""
    return Decomposition(a.rs, {tuple(k * c for c in mu): m for mu, m in a.terms.items()})


def dual_decomposition(a: Decomposition) -> Decomposition:
    return Decomposition(a.rs, {a.rs.dual(mu): m for mu, m in a.terms.items()})


def _single_weight(d: Decomposition, what: str) -> Weight:
    if len(d) != 1 or next(iter(d.terms.values())) != 1:
        raise SeriesDataError(f"{what} must resolve to a single irreducible, got {d.format()}")
    return next(iter(d.terms))


def _aad(entry: SeriesEntry, args: str, representative: bool) -> Decomposition:
    pieces = _split_top(args, ";")
    operands = _split_top(pieces[0], ",")
    if len(operands) != 2:
        raise SeriesDataError(f"aad({args}) needs two operands")
    rs = entry.rs
    lam = _single_weight(_product(entry, operands[0], representative), operands[0])
    mu = _single_weight(_product(entry, operands[1], representative), operands[1])
    try:
        if len(pieces) > 1:
            chain = tuple(int(n) - 1 for n in pieces[1].split("-"))
            tau = aad_induced(rs, lam, mu, chain)
        else:
            found = {t for _, t, ok in aad_chains(rs, lam, mu) if ok}
            if len(found) != 1:
                raise SeriesDataError(f"aad({args}) on {entry} is ambiguous: {len(found)} dominant chains")
            tau = found.pop()
    except InductionError as e:
        raise SeriesDataError(f"aad({args}) on {entry}: {e}") from e
    return Decomposition.irreducible(rs, tau)


def _factor(entry: SeriesEntry, text: str, representative: bool) -> Decomposition:
    match = _AAD_RE.match(text)
    if match:
        out = _aad(entry, match["args"], representative)
        return dual_decomposition(out) if match["dual"] else out
    match = _FACTOR_RE.match(text)
    if not match:
        raise SeriesDataError(f"cannot parse role factor {text!r}")
    tabled_power = f"{match['name']}^({match['power']})"
    if match["power"] and tabled_power in entry.roles:
        # a tabled Cartan power overrides the computed one on degenerate columns
        out = entry.role(tabled_power, representative)
    else:
        out = entry.role(match["name"], representative)
        if match["power"]:
            out = cartan_power(out, int(match["power"]))
    if match["dual"]:
        out = dual_decomposition(out)
    return out


def _product(entry: SeriesEntry, text: str, representative: bool) -> Decomposition:
    factors = _split_top(text, ".")
    out = _factor(entry, factors[0], representative)
    for f in factors[1:]:
        out = cartan_product(out, _factor(entry, f, representative))
    return out


def evaluate_expression(entry: SeriesEntry, text: str, representative: bool = False) -> Decomposition:
    """Resolve one signed term such as ``2V.g`` or ``-g2`` to a (possibly virtual) decomposition."""
    match = _TERM_RE.match(text.strip())
    coef_text, body = match["coef"], match["body"].strip()
    if coef_text in ("", "-"):
        coef = -1 if coef_text == "-" else 1
    else:
        coef = int(coef_text)
    if not body:
        if coef_text in ("", "-"):
            raise SeriesDataError(f"empty role expression {text!r}")
        return Decomposition.irreducible(entry.rs, entry.rs.zero(), coef)
    return _product(entry, body, representative).scale(coef)


def evaluate_terms(entry: SeriesEntry, terms: list[str], representative: bool = False) -> Decomposition:
    out = Decomposition(entry.rs)
    for t in terms:
        out = out + evaluate_expression(entry, t, representative)
    return out


# ----------------------------------------------------------------------
# Tables
# ----------------------------------------------------------------------


@dataclass
class SeriesTable:
    series: str
    version: int
    numbering: str
    notes: list[str]
    entries: list[SeriesEntry]
    identities: list[IdentityModel]
    generating_functions: list[GFModel]

    def entry(self, m: Fraction | str) -> SeriesEntry:
        m = parse_m(m)
        for e in self.entries:
            if e.m == m:
                return e
        raise SeriesDataError(f"the {self.series} table has no entry at m = {m}")

    @property
    def tabled_m(self) -> list[Fraction]:
        return [e.m for e in self.entries]

    def identity(self, identity_id: str) -> IdentityModel:
        for ident in self.identities:
            if ident.id == identity_id:
                return ident
        raise SeriesDataError(f"the {self.series} table has no identity {identity_id!r}")

    def identities_for(self, m: Fraction) -> list[IdentityModel]:
        return [i for i in self.identities if i.m is None or m in {parse_m(x) for x in i.m}]

    def generating_functions_for(self, m: Fraction) -> list[GFModel]:
        return [g for g in self.generating_functions if g.m is None or m in {parse_m(x) for x in g.m}]


def _entry(series: str, model) -> SeriesEntry:
    algebra = AlgebraType.parse(model.algebra)
    rs = build_root_system(algebra)
    roles = {}
    for name, terms in model.roles.items():
        roles[name] = tuple(RoleTerm(rs.require_dominant(t.weight), t.sign, t.tag) for t in terms)
    symmetry = tuple(tuple(p - 1 for p in perm) for perm in model.symmetry)
    for perm in symmetry:
        if len(perm) != rs.rank:
            raise SeriesDataError(f"{series} m={model.m}: symmetry {perm} does not act on rank {rs.rank}")
    return SeriesEntry(
        series=series,
        m=parse_m(model.m),
        algebra=algebra,
        rs=rs,
        roles=roles,
        symmetry=symmetry,
        label=model.label or str(algebra),
        corrections=dict(model.corrections),
    )


@lru_cache(maxsize=None)
def _load(path: str) -> SeriesTable:
    try:
        model = SeriesFileModel.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise SeriesDataError(f"series table {path} not found") from e
    except ValidationError as e:
        raise SeriesDataError(f"series table {path} is malformed: {e}") from e
    table = SeriesTable(
        series=model.series,
        version=model.version,
        numbering=model.numbering,
        notes=list(model.notes),
        entries=[_entry(model.series, e) for e in model.entries],
        identities=list(model.identities),
        generating_functions=list(model.generating_functions),
    )
    logger.debug("series_table_loaded", series=table.series, version=table.version, entries=len(table.entries))
    return table


def load_series(series: str, data_path: str | Path | None = None) -> SeriesTable:
    base = Path(data_path or get_settings().data_path)
    return _load(str(base / f"{series}.json"))


def available_series(data_path: str | Path | None = None) -> list[str]:
    base = Path(data_path or get_settings().data_path)
    return sorted(p.stem for p in base.glob("*.json"))
