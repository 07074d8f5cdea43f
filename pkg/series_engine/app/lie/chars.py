"""
Formal characters and irreducible decompositions.

Characters are stored on dominant representatives only; the multiplicity of
any weight is that of its dominant conjugate. Freudenthal's recursion is the
production multiplicity algorithm, Kostant's formula the cross-check oracle.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import structlog

from app.config import get_settings
from app.errors import BudgetExceededError, GuardExceededError, WeightError
from app.lie.rootsys import RootSystem, Weight

logger = structlog.get_logger()


class CasimirNormalization(str, enum.Enum):
    HIGHEST_ROOT = "highest-root"
    KILLING = "killing"

    @classmethod
    def parse(cls, value: str | CasimirNormalization) -> CasimirNormalization:
        if isinstance(value, CasimirNormalization):
            return value
        value = value.strip().lower().replace("_", "-")
        aliases = {"hr": cls.HIGHEST_ROOT, "highest": cls.HIGHEST_ROOT, "kill": cls.KILLING}
        if value in aliases:
            return aliases[value]
        return cls(value)

    def conversion_factor(self, rs: RootSystem) -> int:
        """Divisor turning a highest-root Casimir into this normalization (simple algebras)."""
        return 2 * rs.dual_coxeter if self is CasimirNormalization.KILLING else 1


class FormalCharacter:
    """Weyl-symmetric weight multiset, stored as dominant weight → multiplicity."""

    __slots__ = ("rs", "entries")

    def __init__(self, rs: RootSystem, entries: Mapping[Weight, int] | None = None):
        self.rs = rs
        self.entries: dict[Weight, int] = {w: m for w, m in (entries or {}).items() if m}

    @classmethod
    def from_weights(cls, rs: RootSystem, weights: Mapping[Weight, int]) -> FormalCharacter:
        """Build from a full weight map, rejecting maps that are not Weyl-symmetric."""
        out: dict[Weight, int] = {}
        for mu, mult in weights.items():
            if not mult:
                continue
            for i in range(rs.rank):
                if weights.get(rs.reflect(mu, i), 0) != mult:
                    raise WeightError(f"weight map is not Weyl-symmetric at {list(mu)} (reflection {i + 1})")
            if rs.is_dominant(mu):
                out[mu] = mult
        return cls(rs, out)

    @classmethod
    def trivial(cls, rs: RootSystem, mult: int = 1) -> FormalCharacter:
        return cls(rs, {rs.zero(): mult})

    def __repr__(self) -> str:
        return f"FormalCharacter({self.rs.type}, dominant={len(self.entries)}, mass={self.mass()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.rs.type == other.rs.type and self.entries == other.entries

    def __bool__(self) -> bool:
        return bool(self.entries)

    def multiplicity(self, mu: Weight) -> int:
        return self.entries.get(self.rs.dominant_representative(mu), 0)

    def mass(self) -> int:
        rs = self.rs
        return sum(m * rs.orbit_size(mu) for mu, m in self.entries.items())

    def weight_count(self) -> int:
        """Number of distinct weights (orbit sizes summed)."""
        rs = self.rs
        return sum(rs.orbit_size(mu) for mu in self.entries)

    def expand(self) -> dict[Weight, int]:
        """Full weight map, every orbit enumerated."""
        out: dict[Weight, int] = {}
        for mu, m in self.entries.items():
            for nu in self.rs.weyl_orbit(mu):
                out[nu] = m
        return out

    def __add__(self, other: FormalCharacter) -> FormalCharacter:
        entries = dict(self.entries)
        for mu, m in other.entries.items():
            entries[mu] = entries.get(mu, 0) + m
        return FormalCharacter(self.rs, entries)

    def __sub__(self, other: FormalCharacter) -> FormalCharacter:
        return self + other.scale(-1)

    def scale(self, k: int) -> FormalCharacter:
        return FormalCharacter(self.rs, {mu: k * m for mu, m in self.entries.items()})

    def __mul__(self, other: FormalCharacter) -> FormalCharacter:
        return character_product(self, other)

    def dual(self) -> FormalCharacter:
        rs = self.rs
        return FormalCharacter(rs, {rs.dual(mu): m for mu, m in self.entries.items()})

    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self.entries.values())


def character_product(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    """
    Product of characters on dominant representatives.

    With one side expanded to its full weight set, the coefficient at a dominant
    ν satisfies c_ν·|W·ν| = Σ m_a(μ)·|W·μ|·m_b(y) over dominant μ of ``a`` and
    weights y of ``b`` with μ+y conjugate to ν.
    """
    rs = a.rs
    if not a.entries or not b.entries:
        return FormalCharacter(rs)
    # Expand the side whose full weight set makes the double loop cheaper
    if len(a.entries) * b.weight_count() > len(b.entries) * a.weight_count():
        a, b = b, a
    expanded = b.expand()
    dominant = rs.dominant_representative
    acc: dict[Weight, int] = defaultdict(int)
    for mu, m in a.entries.items():
        weight = m * rs.orbit_size(mu)
        for y, my in expanded.items():
            acc[dominant(tuple(p + q for p, q in zip(mu, y)))] += weight * my
    out = {}
    for nu, total in acc.items():
        if total:
            size = rs.orbit_size(nu)
            assert total % size == 0, f"non-integral product coefficient at {nu}"
            out[nu] = total // size
    return FormalCharacter(rs, out)


class Decomposition:
    """Finite (possibly virtual) sum of irreducible modules, keyed by dominant highest weight."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] | None = None):
        self.rs = rs
        acc: dict[Weight, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else (terms or [])
        for mu, m in items:
            mu = rs.validate(mu)
            if not rs.is_dominant(mu):
                raise WeightError(f"decomposition term {list(mu)} is not dominant")
            acc[mu] += m
        self.terms: dict[Weight, int] = {mu: m for mu, m in acc.items() if m}

    @classmethod
    def irreducible(cls, rs: RootSystem, mu: Weight, mult: int = 1) -> Decomposition:
        return cls(rs, {mu: mult})

    def __repr__(self) -> str:
        return f"Decomposition({self.rs.type}, {self.format()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.rs.type == other.rs.type and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Weight, int]]:
        return iter(self.sorted_items())

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, mu: Weight) -> bool:
        return mu in self.terms

    def __getitem__(self, mu: Weight) -> int:
        return self.terms.get(tuple(mu), 0)

    def __add__(self, other: Decomposition) -> Decomposition:
        return Decomposition(self.rs, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: Decomposition) -> Decomposition:
        return self + other.scale(-1)

    def scale(self, k: int) -> Decomposition:
        return Decomposition(self.rs, {mu: k * m for mu, m in self.terms.items()})

    @property
    def is_virtual(self) -> bool:
        return any(m < 0 for m in self.terms.values())

    def contains(self, other: Decomposition) -> bool:
        """Every term of ``other`` occurs here with at least its multiplicity."""
        return all(self.terms.get(mu, 0) >= m for mu, m in other.terms.items())

    def sorted_items(self) -> list[tuple[Weight, int]]:
        rs = self.rs
        return sorted(self.terms.items(), key=lambda item: (-rs.height(item[0]), tuple(-c for c in item[0])))

    def dims(self) -> list[tuple[Weight, int, int]]:
        return [(mu, m, weyl_dimension(self.rs, mu)) for mu, m in self.sorted_items()]

    def total_dim(self) -> int:
        return sum(m * weyl_dimension(self.rs, mu) for mu, m in self.terms.items())

    def character(self) -> FormalCharacter:
        out = FormalCharacter(self.rs)
        for mu, m in self.terms.items():
            out = out + irr_character(self.rs, mu).scale(m)
        return out

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mu, m, d in self.dims():
            coeff = "" if m == 1 else ("-" if m == -1 else f"{m}·")
            parts.append(f"{coeff}{self.rs.format_weight(mu)}({d})")
        return " + ".join(parts).replace("+ -", "- ")


# ----------------------------------------------------------------------
# Dimension and Casimir
# ----------------------------------------------------------------------


@lru_cache(maxsize=200_000)
def _weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    shifted = tuple(c + 1 for c in lam)
    num, den = 1, 1
    for beta in rs.positive_roots:
        num *= rs.inner_scaled(shifted, beta)
        den *= rs.inner_scaled(rs.rho, beta)
    assert num % den == 0
    return num // den


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Π_{β>0} (λ+ρ, β)/(ρ, β)."""
    lam = rs.require_dominant(lam)
    return _weyl_dimension(rs, lam)


def casimir(rs: RootSystem, lam: Weight, norm: CasimirNormalization | str = CasimirNormalization.HIGHEST_ROOT) -> Fraction:
    """
    (λ, λ+2ρ) in the requested normalization.

    Killing mode divides each simple factor's contribution by its own 2h∨, so the
    adjoint of every simple factor has eigenvalue 1.
    """
    lam = rs.require_dominant(lam)
    norm = CasimirNormalization.parse(norm)
    shifted = tuple(c + 2 for c in lam)
    if norm is CasimirNormalization.HIGHEST_ROOT:
        return rs.inner(lam, shifted)
    total = Fraction(0)
    for idx, s in enumerate(rs.type.slices()):
        part = tuple(c if s.start <= i < s.stop else 0 for i, c in enumerate(lam))
        part_shift = tuple(c + 2 if s.start <= i < s.stop else 0 for i, c in enumerate(lam))
        total += rs.inner(part, part_shift) / (2 * rs.dual_coxeters[idx])
    return total


# ----------------------------------------------------------------------
# Multiplicities
# ----------------------------------------------------------------------


def dominant_weights(rs: RootSystem, lam: Weight) -> list[Weight]:
    """Dominant weights of V_λ, highest first (subtract positive roots staying dominant)."""
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for beta in rs.positive_roots:
            nu = tuple(a - b for a, b in zip(mu, beta))
            if nu not in seen and all(c >= 0 for c in nu):
                seen.add(nu)
                stack.append(nu)
    return sorted(seen, key=lambda mu: (-rs.height(mu), tuple(-c for c in mu)))


@lru_cache(maxsize=4096)
def _freudenthal(rs: RootSystem, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    weights = dominant_weights(rs, lam)
    roots = rs.positive_roots
    gram = rs._gram_rows
    n = rs.rank
    # (x, β)·gram_den = Σ x_i g_β[i]
    g_beta = [tuple(sum(gram[i][j] * beta[j] for j in range(n)) for i in range(n)) for beta in roots]

    def ip(x: Weight, g: Weight) -> int:
        return sum(a * b for a, b in zip(x, g) if a)

    lam_rho = tuple(c + 1 for c in lam)
    top = rs.inner_scaled(lam_rho, lam_rho)
    dominant = rs.dominant_representative
    mult: dict[Weight, int] = {lam: 1}
    for mu in weights[1:]:
        total = 0
        for beta, g in zip(roots, g_beta):
            nu = tuple(a + b for a, b in zip(mu, beta))
            while True:
                m = mult.get(dominant(nu))
                if not m:
                    break
                total += m * ip(nu, g)
                nu = tuple(a + b for a, b in zip(nu, beta))
        mu_rho = tuple(c + 1 for c in mu)
        denom = top - rs.inner_scaled(mu_rho, mu_rho)
        assert denom > 0 and (2 * total) % denom == 0, f"Freudenthal division failed at {mu}"
        value = 2 * total // denom
        if value:
            mult[mu] = value
    return tuple(mult.items())


def irr_character(rs: RootSystem, lam: Weight, limit: int | None = None) -> FormalCharacter:
    """Character of V_λ by Freudenthal's recursion over dominant weights."""
    lam = rs.require_dominant(lam)
    limit = limit if limit is not None else get_settings().max_character_mass
    dim = _weyl_dimension(rs, lam)
    if dim > limit:
        raise BudgetExceededError(f"irr_character {rs.format_weight(lam)}", dim, limit)
    return FormalCharacter(rs, dict(_freudenthal(rs, lam)))


def _partition_table(rs: RootSystem, bound: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Kostant partition function on the box 0 ≤ c ≤ bound (root coordinates), coin-change style."""
    box = list(itertools.product(*(range(b + 1) for b in bound)))
    table = dict.fromkeys(box, 0)
    table[tuple(0 for _ in bound)] = 1
    for beta in rs.positive_roots_root:
        if any(b > u for b, u in zip(beta, bound)):
            continue
        # lexicographic order visits c − β before c
        for c in box:
            prev = tuple(x - y for x, y in zip(c, beta))
            if all(x >= 0 for x in prev):
                table[c] += table[prev]
    return table


def kostant_multiplicity(rs: RootSystem, lam: Weight, mu: Weight) -> int:
    """Σ_w ε(w) P(w(λ+ρ) − (μ+ρ)); exponential, kept as an oracle."""
    lam = rs.require_dominant(lam)
    mu = rs.validate(mu)
    guard = get_settings().kostant_max_rank
    if rs.rank > guard:
        raise GuardExceededError(f"kostant_multiplicity on rank {rs.rank} exceeds guard {guard}")
    mu_rho = tuple(c + 1 for c in mu)
    targets: list[tuple[tuple[int, ...], int]] = []
    for image, sign in rs.weyl_orbit_signed(tuple(c + 1 for c in lam)).items():
        coords = rs.root_coordinates(tuple(a - b for a, b in zip(image, mu_rho)))
        if all(c.denominator == 1 and c >= 0 for c in coords):
            targets.append((tuple(int(c) for c in coords), sign))
    if not targets:
        return 0
    bound = tuple(max(t[i] for t, _ in targets) for i in range(rs.rank))
    table = _partition_table(rs, bound)
    return sum(sign * table[t] for t, sign in targets)


# ----------------------------------------------------------------------
# Decomposition
# ----------------------------------------------------------------------


def decompose_character(chi: FormalCharacter, max_iterations: int | None = None) -> Decomposition:
    """
    Peel off irreducibles from the top.

    Repeatedly take a maximal dominant weight (largest height, then
    lexicographically largest) with nonzero coefficient and subtract that many
    copies of its irreducible character. Signed input gives a virtual result.
    """
    rs = chi.rs
    guard = max_iterations if max_iterations is not None else get_settings().max_decompose_iterations
    remaining = dict(chi.entries)
    for mu in remaining:
        if not rs.is_dominant(mu):
            raise WeightError(f"character entry {list(mu)} is not on a dominant representative")
    heights = {mu: rs.height(mu) for mu in remaining}
    terms: dict[Weight, int] = {}
    iterations = 0
    while remaining:
        iterations += 1
        if iterations > guard:
            raise GuardExceededError(f"decompose_character exceeded {guard} iterations")
        top = max(remaining, key=lambda w: (heights[w], w))
        coeff = remaining[top]
        terms[top] = coeff
        for nu, m in irr_character(rs, top, limit=math.inf).entries.items():
            value = remaining.get(nu, 0) - coeff * m
            if value:
                if nu not in heights:
                    heights[nu] = rs.height(nu)
                remaining[nu] = value
            else:
                remaining.pop(nu, None)
    logger.debug("character_decomposed", type=str(rs.type), components=len(terms), iterations=iterations)
    return Decomposition(rs, terms)


def tensor(rs: RootSystem, lam: Weight, mu: Weight, limit: int | None = None) -> Decomposition:
    """
    V_λ ⊗ V_μ by Klimyk's formula.

    Each weight ν of the smaller factor contributes sign·mult at the dot-action
    dominant conjugate of (other highest weight)+ν.
    """
    lam = rs.require_dominant(lam)
    mu = rs.require_dominant(mu)
    if weyl_dimension(rs, lam) < weyl_dimension(rs, mu):
        lam, mu = mu, lam
    limit = limit if limit is not None else get_settings().max_character_mass
    acc: dict[Weight, int] = defaultdict(int)
    for nu, m in irr_character(rs, mu, limit=limit).expand().items():
        top, sign = rs.dominant_conjugate(tuple(a + b for a, b in zip(lam, nu)))
        if sign:
            acc[top] += sign * m
    return Decomposition(rs, acc)


def tensor_decompositions(a: Decomposition, b: Decomposition) -> Decomposition:
    """Bilinear extension of ``tensor`` to sums of irreducibles."""
    rs = a.rs
    out = Decomposition(rs)
    for lam, m in a.terms.items():
        for mu, n in b.terms.items():
            out = out + tensor(rs, lam, mu).scale(m * n)
    return out
