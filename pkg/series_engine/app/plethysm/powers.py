"""
Symmetric, exterior and Schur powers of formal characters.

Everything is built from Adams operations: Newton's identities for S^k and Λ^k,
and the power-sum expansion ch S_P = (1/k!) Σ_c |c| χ_P(c) Π ψ^{c_i} for general
shapes. All coefficients are integers and every division is checked exact.
"""

from __future__ import annotations

import math

import structlog

from app.config import get_settings
from app.errors import BudgetExceededError
from app.lie.chars import FormalCharacter
from app.plethysm.partitions import Partition, char_table, partitions_of

logger = structlog.get_logger()


def adams(chi: FormalCharacter, j: int) -> FormalCharacter:
    """ψ^j: every weight μ becomes jμ with the same multiplicity."""
    if j < 1:
        raise ValueError("Adams operations are defined for j >= 1")
    if j == 1:
        return chi
    return FormalCharacter(chi.rs, {tuple(j * c for c in mu): m for mu, m in chi.entries.items()})


def _check_budget(what: str, chi: FormalCharacter, k: int, estimate: int, max_degree: int | None, budget: int | None):
    settings = get_settings()
    dim = chi.mass()
    degree_bound = max_degree if max_degree is not None else settings.plethysm_degree_for(dim)
    if k > degree_bound:
        raise BudgetExceededError(f"{what} degree {k} of a {dim}-dimensional module", k, degree_bound)
    limit = budget if budget is not None else settings.max_character_mass
    if estimate > limit:
        raise BudgetExceededError(f"{what} of a {dim}-dimensional module", estimate, limit)


class PowerSums:
    """Memoized Adams powers ψ^j(χ) and their products p_c over cycle types c."""

    def __init__(self, chi: FormalCharacter):
        self.chi = chi
        self._adams: dict[int, FormalCharacter] = {}
        self._products: dict[Partition, FormalCharacter] = {Partition(()): FormalCharacter.trivial(chi.rs)}

    def adams(self, j: int) -> FormalCharacter:
        if j not in self._adams:
            self._adams[j] = adams(self.chi, j)
        return self._adams[j]

    def product(self, cycle_type: Partition) -> FormalCharacter:
        cycle_type = Partition(cycle_type)
        if cycle_type not in self._products:
            head = Partition(cycle_type[:-1])
            self._products[cycle_type] = self.product(head) * self.adams(cycle_type[-1])
        return self._products[cycle_type]


def _newton(chi: FormalCharacter, k: int, alternating: bool) -> FormalCharacter:
    sums = PowerSums(chi)
    series = [FormalCharacter.trivial(chi.rs)]
    for n in range(1, k + 1):
        acc = FormalCharacter(chi.rs)
        for j in range(1, n + 1):
            term = series[n - j] * sums.adams(j)
            if alternating and j % 2 == 0:
                term = term.scale(-1)
            acc = acc + term
        entries = {}
        for mu, m in acc.entries.items():
            assert m % n == 0, f"Newton recurrence left a remainder at degree {n}"
            entries[mu] = m // n
        series.append(FormalCharacter(chi.rs, entries))
    return series[k]


def sym_power(chi: FormalCharacter, k: int, max_degree: int | None = None, budget: int | None = None) -> FormalCharacter:
    """ch S^k V from k·h_k = Σ_j h_{k−j} ψ^j."""
    if k == 0:
        return FormalCharacter.trivial(chi.rs)
    d = chi.mass()
    _check_budget("sym_power", chi, k, math.comb(d + k - 1, k), max_degree, budget)
    logger.debug("sym_power", type=str(chi.rs.type), dim=d, k=k)
    return _newton(chi, k, alternating=False)


def ext_power(chi: FormalCharacter, k: int, max_degree: int | None = None, budget: int | None = None) -> FormalCharacter:
    """ch Λ^k V from k·e_k = Σ_j (−1)^{j−1} e_{k−j} ψ^j."""
    if k == 0:
        return FormalCharacter.trivial(chi.rs)
    d = chi.mass()
    if k > d:
        return FormalCharacter(chi.rs)
    _check_budget("ext_power", chi, k, math.comb(d, k), max_degree, budget)
    logger.debug("ext_power", type=str(chi.rs.type), dim=d, k=k)
    return _newton(chi, k, alternating=True)


def schur_power(
    chi: FormalCharacter,
    shape: Partition,
    max_degree: int | None = None,
    budget: int | None = None,
    sums: PowerSums | None = None,
) -> FormalCharacter:
    """ch S_P V = (1/k!) Σ_c |c| χ_P(c) Π_i ψ^{c_i}(χ)."""
    shape = Partition(shape)
    k = shape.size
    if k == 0:
        return FormalCharacter.trivial(chi.rs)
    d = chi.mass()
    _check_budget(f"schur_power {shape}", chi, k, shape.gl_dimension(d), max_degree, budget)
    table = char_table(k)
    sums = sums or PowerSums(chi)
    acc: dict = {}
    for cycle_type in table.classes:
        coeff = table.class_size(cycle_type) * table.value(shape, cycle_type)
        if not coeff:
            continue
        for mu, m in sums.product(cycle_type).entries.items():
            acc[mu] = acc.get(mu, 0) + coeff * m
    order = math.factorial(k)
    entries = {}
    for mu, m in acc.items():
        assert m % order == 0, f"schur_power {shape}: coefficient at {mu} not divisible by {order}"
        if m:
            entries[mu] = m // order
    return FormalCharacter(chi.rs, entries)


def tensor_power(chi: FormalCharacter, k: int) -> FormalCharacter:
    out = FormalCharacter.trivial(chi.rs)
    for _ in range(k):
        out = out * chi
    return out


def schur_reconstitution(chi: FormalCharacter, k: int, budget: int | None = None) -> FormalCharacter:
    """Σ_{|P|=k} dim(χ_P)·ch S_P V, which must equal χ^k."""
    table = char_table(k)
    sums = PowerSums(chi)
    out = FormalCharacter(chi.rs)
    for shape in partitions_of(k):
        if len(shape) > chi.mass():
            continue
        out = out + schur_power(chi, shape, max_degree=k, budget=budget, sums=sums).scale(table.irr_dimension(shape))
    return out
