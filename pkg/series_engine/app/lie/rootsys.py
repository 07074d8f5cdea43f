"""
Root systems in Bourbaki numbering.

Weights are integer tuples in the fundamental-weight basis. The invariant form
is normalized per simple factor so that the highest root has (α̃, α̃) = 2;
product algebras carry the block-diagonal form.
"""

from __future__ import annotations

import math
import re
from collections import deque
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np
import structlog
import sympy

from app.config import get_settings
from app.errors import BudgetExceededError, InvalidAlgebraError, WeightError
from app.lie.cartan import AlgebraType, SimpleFactor, classify_component, components

logger = structlog.get_logger()

Weight = tuple[int, ...]

_OMEGA_RE = re.compile(r"^(?:omega|w|ω)_?(\d+)$", re.IGNORECASE)


class RootSystem:
    """Immutable root datum of a (possibly non-simple) algebra type."""

    def __init__(self, algebra: AlgebraType):
        self.type = algebra
        self.rank = algebra.rank
        n = self.rank

        cartan = [[0] * n for _ in range(n)]
        norms: list[Fraction] = []
        self.factor_of_node: list[int] = []
        for idx, (factor, offset) in enumerate(zip(algebra.factors, algebra.offsets)):
            block = factor.cartan_matrix()
            for i in range(factor.rank):
                for j in range(factor.rank):
                    cartan[offset + i][offset + j] = block[i][j]
            norms.extend(factor.root_norms())
            self.factor_of_node.extend([idx] * factor.rank)

        self.cartan_rows: tuple[Weight, ...] = tuple(tuple(row) for row in cartan)
        self.cartan = np.array(cartan, dtype=np.int64)
        self.root_norms: tuple[Fraction, ...] = tuple(norms)

        # Exact inverse; (ω_i, ω_j) = (A⁻¹)_ij · (α_j, α_j)/2
        inverse = sympy.Matrix(cartan).inv()
        self._inverse = [[Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(n)] for i in range(n)]
        gram = [[self._inverse[i][j] * norms[j] / 2 for j in range(n)] for i in range(n)]
        self.gram: tuple[tuple[Fraction, ...], ...] = tuple(tuple(row) for row in gram)
        self.gram_den = math.lcm(*(g.denominator for row in gram for g in row))
        self.gram_num = np.array([[int(g * self.gram_den) for g in row] for row in gram], dtype=np.int64)
        self._gram_rows: tuple[Weight, ...] = tuple(tuple(int(v) for v in row) for row in self.gram_num)
        self._inverse_den = math.lcm(*(x.denominator for row in self._inverse for x in row))
        self._inverse_num = tuple(tuple(int(x * self._inverse_den) for x in row) for row in self._inverse)

        self.positive_roots_root, self.positive_roots = self._positive_roots()
        self.rho: Weight = (1,) * n
        self._orbit_sizes: dict[tuple[bool, ...], int] = {}
        self.two_rho: Weight = (2,) * n

        logger.debug("root_system_built", type=str(algebra), positive_roots=len(self.positive_roots))

    def __repr__(self) -> str:
        return f"RootSystem({self.type})"

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    def _positive_roots(self) -> tuple[tuple[Weight, ...], tuple[Weight, ...]]:
        """Positive roots by the root-string algorithm, in root and in fundamental coordinates."""
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        found = set(simple)
        ordered = list(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            omega = self.from_root_coordinates(beta)
            for i in range(n):
                # p: how far the α_i-string extends downward from β
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) not in found:
                        break
                    p += 1
                q = p - omega[i]
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        ordered.append(up)
                        queue.append(up)
        ordered.sort(key=lambda c: (sum(c), c))
        return tuple(ordered), tuple(self.from_root_coordinates(c) for c in ordered)

    # ------------------------------------------------------------------
    # Coordinates
    # ------------------------------------------------------------------

    def from_root_coordinates(self, coeffs: Iterable[int]) -> Weight:
        coeffs = tuple(coeffs)
        rows = self.cartan_rows
        return tuple(sum(c * rows[j][i] for j, c in enumerate(coeffs) if c) for i in range(self.rank))

    def root_coordinates(self, mu: Weight) -> tuple[Fraction, ...]:
        """Coefficients c with μ = Σ c_j α_j (c = μ·A⁻¹)."""
        inv = self._inverse
        return tuple(sum((mu[i] * inv[i][j] for i in range(self.rank)), Fraction(0)) for j in range(self.rank))

    def height(self, mu: Weight) -> Fraction:
        """Sum of the simple-root coefficients of μ."""
        num = sum(mu[i] * sum(self._inverse_num[i]) for i in range(self.rank))
        return Fraction(num, self._inverse_den)

    def simple_root(self, i: int) -> Weight:
        return self.cartan_rows[i]

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def zero(self) -> Weight:
        return (0,) * self.rank

    # ------------------------------------------------------------------
    # Invariant form
    # ------------------------------------------------------------------

    def validate(self, weight: Iterable[int]) -> Weight:
        weight = tuple(int(x) for x in weight)
        if len(weight) != self.rank:
            raise WeightError(f"weight {weight} has length {len(weight)}, {self.type} has rank {self.rank}")
        return weight

    def inner_scaled(self, lam: Weight, mu: Weight) -> int:
        """(λ, μ) multiplied by ``gram_den``; an exact integer."""
        rows = self._gram_rows
        total = 0
        for i, a in enumerate(lam):
            if a:
                row = rows[i]
                total += a * sum(row[j] * b for j, b in enumerate(mu) if b)
        return total

    def inner(self, lam: Weight, mu: Weight) -> Fraction:
        if len(lam) != self.rank or len(mu) != self.rank:
            raise WeightError(f"weights {lam}, {mu} do not belong to {self.type}")
        return Fraction(self.inner_scaled(lam, mu), self.gram_den)

    def norm(self, mu: Weight) -> Fraction:
        return self.inner(mu, mu)

    # ------------------------------------------------------------------
    # Factors
    # ------------------------------------------------------------------

    @property
    def is_simple(self) -> bool:
        return self.type.is_simple

    def restrict(self, weight: Weight, factor: int) -> Weight:
        return tuple(weight[self.type.slices()[factor]])

    def combine(self, parts: Iterable[Weight]) -> Weight:
        out: list[int] = []
        for part in parts:
            out.extend(part)
        return self.validate(out)

    @cached_property
    def highest_roots(self) -> tuple[Weight, ...]:
        """Highest root of every simple factor, embedded in the full weight space."""
        out = []
        for idx in range(len(self.type.factors)):
            nodes = [i for i, f in enumerate(self.factor_of_node) if f == idx]
            candidates = [r for r in self.positive_roots if all(r[i] == 0 for i in range(self.rank) if i not in nodes)]
            out.append(max(candidates, key=self.height))
        return tuple(out)

    @property
    def highest_root(self) -> Weight:
        if not self.is_simple:
            raise InvalidAlgebraError(f"{self.type} is not simple; use highest_roots")
        return self.highest_roots[0]

    def adjoint_weight(self) -> Weight:
        return self.highest_root

    @cached_property
    def dual_coxeters(self) -> tuple[int, ...]:
        """h∨ = (ρ, α̃) + 1 per factor."""
        out = []
        for idx, theta in enumerate(self.highest_roots):
            rho_f = tuple(1 if self.factor_of_node[i] == idx else 0 for i in range(self.rank))
            value = self.inner(rho_f, theta) + 1
            assert value.denominator == 1
            out.append(int(value))
        return tuple(out)

    @property
    def dual_coxeter(self) -> int:
        if not self.is_simple:
            raise InvalidAlgebraError(f"{self.type} is not simple; use dual_coxeters")
        return self.dual_coxeters[0]

    # ------------------------------------------------------------------
    # Weyl group
    # ------------------------------------------------------------------

    def reflect(self, mu: Weight, i: int) -> Weight:
        c = mu[i]
        if c == 0:
            return mu
        row = self.cartan_rows[i]
        return tuple(m - c * a for m, a in zip(mu, row))

    def is_dominant(self, mu: Weight) -> bool:
        return all(c >= 0 for c in mu)

    def require_dominant(self, mu: Weight) -> Weight:
        mu = self.validate(mu)
        if not self.is_dominant(mu):
            raise WeightError(f"{list(mu)} is not dominant for {self.type}")
        return mu

    def dominant_representative(self, mu: Weight) -> Weight:
        mu = list(mu)
        rows = self.cartan_rows
        n = self.rank
        while True:
            for i in range(n):
                c = mu[i]
                if c < 0:
                    row = rows[i]
                    for j in range(n):
                        if row[j]:
                            mu[j] -= c * row[j]
                    break
            else:
                return tuple(mu)

    def dominant_conjugate(self, lam: Weight) -> tuple[Weight, int]:
        """
        Dot-action conjugate: the dominant w(λ+ρ)−ρ with sign ε(w).

        The sign is 0 when λ+ρ lies on a wall, i.e. is fixed by a reflection.
        """
        nu = [c + 1 for c in lam]
        rows = self.cartan_rows
        n = self.rank
        sign = 1
        while True:
            for i in range(n):
                c = nu[i]
                if c < 0:
                    row = rows[i]
                    for j in range(n):
                        if row[j]:
                            nu[j] -= c * row[j]
                    sign = -sign
                    break
            else:
                break
        if any(c == 0 for c in nu):
            sign = 0
        return tuple(c - 1 for c in nu), sign

    def dual(self, lam: Weight) -> Weight:
        """Highest weight of the dual module: the dominant conjugate of −λ."""
        return self.dominant_representative(tuple(-c for c in lam))

    @cached_property
    def weyl_group_order(self) -> int:
        return math.prod(f.weyl_group_order() for f in self.type.factors)

    def parabolic_order(self, nodes: Iterable[int]) -> int:
        """Order of the subgroup of W generated by the reflections at ``nodes``."""
        order = 1
        for comp in components(self.cartan_rows, nodes):
            factor, _ = classify_component(self.cartan_rows, comp)
            order *= factor.weyl_group_order()
        return order

    def orbit_size(self, mu: Weight) -> int:
        """|W| / |W_μ| with W_μ the parabolic subgroup fixing the dominant representative."""
        dom = self.dominant_representative(mu)
        mask = tuple(c == 0 for c in dom)
        size = self._orbit_sizes.get(mask)
        if size is None:
            size = self.weyl_group_order // self.parabolic_order(i for i, zero in enumerate(mask) if zero)
            self._orbit_sizes[mask] = size
        return size

    def weyl_orbit(self, mu: Weight, limit: int | None = None) -> set[Weight]:
        """The full W-orbit, enumerated downward from the dominant representative."""
        limit = limit if limit is not None else get_settings().max_orbit_size
        size = self.orbit_size(mu)
        if size > limit:
            raise BudgetExceededError("weyl_orbit", size, limit)
        start = self.dominant_representative(mu)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for nu in frontier:
                for i, c in enumerate(nu):
                    if c > 0:
                        image = self.reflect(nu, i)
                        if image not in seen:
                            seen.add(image)
                            nxt.append(image)
            frontier = nxt
        assert len(seen) == size
        return seen

    def weyl_orbit_signed(self, mu: Weight) -> dict[Weight, int]:
        """Orbit of a regular weight together with ε(w) of the element reaching each image."""
        start = self.dominant_representative(mu)
        if any(c == 0 for c in start):
            raise WeightError(f"{list(mu)} is not regular")
        signs = {start: 1}
        frontier = [start]
        while frontier:
            nxt = []
            for nu in frontier:
                for i, c in enumerate(nu):
                    if c > 0:
                        image = self.reflect(nu, i)
                        if image not in signs:
                            signs[image] = -signs[nu]
                            nxt.append(image)
            frontier = nxt
        return signs

    # ------------------------------------------------------------------
    # Parsing
    # ------------------------------------------------------------------

    def parse_weight(self, text: str) -> Weight:
        """Accept ``1,0,0``, ``1,0|0,1``, ``omega3`` (1-based), ``adjoint`` or ``0``."""
        text = text.strip()
        if text.lower() in ("adjoint", "adj", "g"):
            return self.adjoint_weight()
        match = _OMEGA_RE.match(text)
        if match:
            i = int(match.group(1))
            if not 1 <= i <= self.rank:
                raise WeightError(f"omega{i} is out of range for {self.type}")
            return self.fundamental_weight(i - 1)
        if text == "0":
            return self.zero()
        try:
            coords = [int(x) for x in re.split(r"[,|\s]+", text.strip("[]()")) if x]
        except ValueError as e:
            raise WeightError(f"cannot parse weight {text!r}") from e
        return self.validate(coords)

    def format_weight(self, mu: Weight) -> str:
        if self.is_simple:
            return "[" + ",".join(str(c) for c in mu) + "]"
        parts = [",".join(str(c) for c in mu[s]) for s in self.type.slices()]
        return "[" + "|".join(parts) + "]"


@lru_cache(maxsize=None)
def _build(algebra: AlgebraType) -> RootSystem:
    return RootSystem(algebra)


def build_root_system(algebra: AlgebraType | SimpleFactor | str) -> RootSystem:
    """Cached constructor; root systems are immutable and shared."""
    if isinstance(algebra, str):
        algebra = AlgebraType.parse(algebra)
    elif isinstance(algebra, SimpleFactor):
        algebra = AlgebraType((algebra,))
    return _build(algebra)
