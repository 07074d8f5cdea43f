"""
The extremal Casimir eigenspace V_k of Λ^k V.

For V = V_λ with λ fundamental, α the simple root at the marked node,

    θ_{V_k} = kθ_V + k(k−1)[(λ, λ) − (α, α)].

For minuscule λ (and for fundamental λ in low degrees, see ``chain_distance``)
the components of Λ^k V with this eigenvalue are the sums of complete
k-subsets of weights of diameter at most 2 with no difference a root longer
than α. Everything else is decided by ``max_casimir_bruteforce``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import structlog

from app.config import get_settings
from app.errors import InvalidAlgebraError, WeightError
from app.extremal.subsets import (
    WeightSubset,
    complete_subsets,
    diameter,
    is_complete,
    largest_complete_size,
    marked_root,
    weight_poset,
)
from app.induction.diagrams import SubdiagramEmbedding, find_subdiagrams
from app.lie.cartan import SimpleFactor
from app.lie.chars import CasimirNormalization, Decomposition, casimir, decompose_character, dominant_weights, irr_character
from app.lie.rootsys import RootSystem, Weight, build_root_system
from app.plethysm.powers import ext_power
from app.schemas.report import ExtremalRow

logger = structlog.get_logger()

HR = CasimirNormalization.HIGHEST_ROOT


def _require_simple(rs: RootSystem, what: str) -> None:
    if not rs.is_simple:
        raise InvalidAlgebraError(f"{what} needs a simple algebra, got {rs.type}")


def is_minuscule(rs: RootSystem, lam: Weight) -> bool:
    lam = rs.require_dominant(lam)
    return any(lam) and dominant_weights(rs, lam) == [lam]


def theta_vk(rs: RootSystem, lam: Weight, k: int, norm: CasimirNormalization | str = HR) -> Fraction:
    """θ_{V_k}; homogeneous in the invariant form, so either normalization is exact."""
    _require_simple(rs, "theta_vk")
    alpha = marked_root(rs, lam)
    value = k * casimir(rs, lam, HR) + k * (k - 1) * (rs.norm(lam) - rs.norm(alpha))
    return value / CasimirNormalization.parse(norm).conversion_factor(rs)


def chain_distance(rs: RootSystem, node: int) -> int | None:
    """
    Distance from ``node`` to the nearest place where its diagram stops looking
    like type A: a branch node or an end of a multiple bond. ``None`` on type A.
    """
    rows = rs.cartan_rows
    nbrs = {v: [u for u in range(rs.rank) if u != v and rows[v][u]] for v in range(rs.rank)}
    defects = {v for v in nbrs if len(nbrs[v]) >= 3 or any(rows[v][u] < -1 or rows[u][v] < -1 for u in nbrs[v])}
    seen = {node: 0}
    queue = deque([node])
    while queue:
        v = queue.popleft()
        if v in defects:
            return seen[v]
        for u in nbrs[v]:
            if u not in seen:
                seen[u] = seen[v] + 1
                queue.append(u)
    return None


def vk_regime(rs: RootSystem, lam: Weight, k: int) -> str | None:
    """``minuscule``, ``chain`` (fundamental, k within two of the chain distance) or ``None``."""
    if is_minuscule(rs, lam):
        return "minuscule"
    support = [i for i, c in enumerate(lam) if c]
    if len(support) == 1 and lam[support[0]] == 1:
        k1 = chain_distance(rs, support[0])
        if k1 is None or k <= k1 + 2:
            return "chain"
    return None


def predicted_subsets(rs: RootSystem, lam: Weight, k: int) -> list[WeightSubset]:
    return complete_subsets(weight_poset(rs, rs.require_dominant(lam)), k)


def max_casimir_bruteforce(
    rs: RootSystem,
    lam: Weight,
    k: int,
    norm: CasimirNormalization | str = HR,
    budget: int | None = None,
) -> tuple[Fraction, Decomposition]:
    """Largest Casimir eigenvalue on Λ^k V_λ and every component attaining it."""
    chi = irr_character(rs, rs.require_dominant(lam))
    d = chi.mass()
    if k < 0 or k > d:
        raise WeightError(f"Λ^{k} of a {d}-dimensional module vanishes")
    # Λ^k V ≅ (Λ^{d−k} V)* for semisimple algebras
    if 2 * k > d:
        character = ext_power(chi, d - k, budget=budget).dual()
    else:
        character = ext_power(chi, k, budget=budget)
    decomposition = decompose_character(character)
    values = {mu: casimir(rs, mu, norm) for mu in decomposition.terms}
    top = max(values.values())
    return top, Decomposition(rs, {mu: m for mu, m in decomposition.terms.items() if values[mu] == top})


def vk_components(rs: RootSystem, lam: Weight, k: int, budget: int | None = None) -> Decomposition:
    """
    Components of V_k. Inside the proven range each complete k-subset
    contributes its weight sum; outside it the top eigenspace of Λ^k V is
    computed directly and kept when its eigenvalue is θ_{V_k}.
    """
    lam = rs.require_dominant(lam)
    regime = vk_regime(rs, lam, k)
    if regime is None:
        logger.warning("vk_outside_proven_range", algebra=str(rs.type), weight=rs.format_weight(lam), k=k)
        value, top = max_casimir_bruteforce(rs, lam, k, budget=budget)
        return top if value == theta_vk(rs, lam, k) else Decomposition(rs)
    out: dict[Weight, int] = {}
    for subset in predicted_subsets(rs, lam, k):
        nu = subset.weight_sum()
        assert rs.is_dominant(nu), f"complete subset {subset} sums to a non-dominant weight"
        out[nu] = out.get(nu, 0) + 1
    logger.debug("vk_components", algebra=str(rs.type), weight=rs.format_weight(lam), k=k, regime=regime, components=len(out))
    return Decomposition(rs, out)


def extremal_row(rs: RootSystem, lam: Weight, k: int, budget: int | None = None) -> ExtremalRow:
    """θ_{V_k}, the predicted V_k and the brute-force top eigenspace of Λ^k V side by side."""
    norm = get_settings().casimir_norm
    lam = rs.require_dominant(lam)
    theta = theta_vk(rs, lam, k)
    predicted = vk_components(rs, lam, k, budget=budget)
    value, top = max_casimir_bruteforce(rs, lam, k, budget=budget)
    if predicted:
        agrees = value == theta and top == predicted
    else:
        agrees = value < theta
    regime = vk_regime(rs, lam, k)
    factor = CasimirNormalization.parse(norm).conversion_factor(rs)
    return ExtremalRow(
        algebra=str(rs.type),
        weight=rs.format_weight(lam),
        k=k,
        theta_formula=str(theta / factor),
        theta_bruteforce=str(value / factor),
        predicted=[f"{m}·{rs.format_weight(mu)}" for mu, m in predicted.sorted_items()],
        eigenspace=[f"{m}·{rs.format_weight(mu)}" for mu, m in top.sorted_items()],
        agrees=agrees,
        note=f"regime={regime or 'outside proven range'}" + ("" if predicted else "; V_k empty"),
    )


# ----------------------------------------------------------------------
# Pair geometry
# ----------------------------------------------------------------------


@dataclass
class DichotomyResult:
    pairs: int
    long_root_pairs: int
    violations: list[tuple[Weight, Weight]]

    @property
    def holds(self) -> bool:
        return not self.violations


def minuscule_dichotomy_check(rs: RootSystem, lam: Weight) -> DichotomyResult:
    """
    Every pair of weights is either at squared distance (α, α) with a root
    difference, or at least 2(α, α) apart with a non-root difference. Pairs
    differing by a root longer than α are counted apart; they only occur off the
    simply-laced types.
    """
    lam = rs.require_dominant(lam)
    if not is_minuscule(rs, lam):
        raise WeightError(f"{rs.format_weight(lam)} is not minuscule for {rs.type}")
    poset = weight_poset(rs, lam)
    a = poset.alpha_sq
    pairs = long_pairs = 0
    violations = []
    for i in range(len(poset)):
        for j in range(i + 1, len(poset)):
            pairs += 1
            d2 = int(poset.distances[i, j])
            is_root = poset.difference(i, j) in poset.roots
            if (d2 == a and is_root) or (d2 >= 2 * a and not is_root):
                continue
            if is_root and d2 > a:
                long_pairs += 1
                continue
            violations.append((poset.weights[i], poset.weights[j]))
    return DichotomyResult(pairs, long_pairs, violations)


def v2_irreducibility_check(rs: RootSystem, lam: Weight, budget: int | None = None) -> tuple[bool, Decomposition, Weight]:
    """
    The top eigenspace of Λ²V is one irreducible; returns it with the expected
    highest weight 2λ − α.
    """
    _require_simple(rs, "v2_irreducibility_check")
    [(_, expected)] = fano_subdiagrams(rs, lam, 2)
    _, top = max_casimir_bruteforce(rs, lam, 2, budget=budget)
    single = len(top) == 1 and next(iter(top.terms.values())) == 1
    return single, top, expected


def fano_subdiagrams(rs: RootSystem, lam: Weight, k: int) -> list[tuple[SubdiagramEmbedding | None, Weight]]:
    """
    Marked subdiagrams (A_{k−1}, ω₁) through the marked node of a fundamental
    weight, each with its transported weight kλ − Σ_j (k−j) α_{n_j}.
    """
    lam = rs.require_dominant(lam)
    support = [i for i, c in enumerate(lam) if c]
    if len(support) != 1 or lam[support[0]] != 1:
        raise WeightError(f"{rs.format_weight(lam)} is not fundamental")
    if k < 1:
        return []
    if k == 1:
        return [(None, lam)]
    out = []
    for e in find_subdiagrams(rs, SimpleFactor("A", k - 1), marking=lam):
        weight = [k * c for c in lam]
        for j, node in enumerate(e.nodes, start=1):
            for idx, a in enumerate(rs.simple_root(node)):
                weight[idx] -= (k - j) * a
        out.append((e, tuple(weight)))
    return out


# ----------------------------------------------------------------------
# Type A lower bound for k₀
# ----------------------------------------------------------------------


def _epsilon(l: int, j: int) -> Weight:
    """ε_j of sl_{l+1} in fundamental coordinates, j = 1..l+1."""
    out = [0] * l
    if j <= l:
        out[j - 1] += 1
    if j >= 2:
        out[j - 2] -= 1
    return tuple(out)


@dataclass
class LowerBound:
    l: int
    i: int
    subset: WeightSubset
    complete: bool
    diameter: int
    k0: int
    conjecture: int

    @property
    def bound_holds(self) -> bool:
        return self.complete and self.diameter <= 2 and self.k0 > self.i * (self.l + 1 - self.i)

    @property
    def conjecture_holds(self) -> bool:
        return self.k0 == self.conjecture


def a_series_lower_bound(l: int, i: int) -> LowerBound:
    """
    The complete set {ω_i} ∪ {ω_i − ε_j + ε_k : j ≤ i < k} of A_l, its
    diameter, and the largest k with V_k ≠ 0 found by exhaustive enumeration.
    """
    if not 1 <= i <= l:
        raise WeightError(f"A{l} has no fundamental weight ω{i}")
    rs = build_root_system(f"A{l}")
    lam = rs.fundamental_weight(i - 1)
    weights = [lam]
    for j in range(1, i + 1):
        for k in range(i + 1, l + 2):
            weights.append(tuple(w - a + b for w, a, b in zip(lam, _epsilon(l, j), _epsilon(l, k))))
    subset = WeightSubset.of(rs, lam, weights)
    k0 = largest_complete_size(subset.poset)
    logger.debug("a_series_lower_bound", l=l, i=i, size=subset.cardinality, k0=k0)
    return LowerBound(l, i, subset, is_complete(subset), diameter(subset), k0, i * (l + 1 - i) + 1)
