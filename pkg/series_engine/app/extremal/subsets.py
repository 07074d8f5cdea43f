"""
Complete weight subsets.

A subset S of the weights of V_λ is complete when it is closed upward: for
μ ∈ S and β a nonzero sum of positive roots, μ+β ∈ S whenever μ+β is a weight
of V_λ. Weights are kept in a poset indexed by their depth λ−μ in simple-root
coordinates, so "μ′ lies above μ" is a componentwise comparison of depths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping

import numpy as np
import structlog

from app.errors import WeightError
from app.lie.chars import irr_character
from app.lie.rootsys import RootSystem, Weight

logger = structlog.get_logger()


def marked_root(rs: RootSystem, lam: Weight) -> Weight:
    """
    The root α paired with λ: the simple root at the marked node of a
    fundamental weight, or the highest root itself for an adjoint weight.
    """
    lam = rs.require_dominant(lam)
    support = [i for i, c in enumerate(lam) if c]
    if len(support) == 1 and lam[support[0]] == 1:
        return rs.simple_root(support[0])
    if lam in rs.highest_roots:
        return lam
    raise WeightError(f"{rs.format_weight(lam)} is neither fundamental nor adjoint for {rs.type}")


class WeightPoset:
    """Weights of V_λ with multiplicities, depths and pairwise squared distances."""

    def __init__(self, rs: RootSystem, lam: Weight, limit: int | None = None):
        self.rs = rs
        self.lam = rs.require_dominant(lam)
        expanded = irr_character(rs, self.lam, limit=limit).expand()
        depths = {}
        for mu in expanded:
            coords = rs.root_coordinates(tuple(a - b for a, b in zip(self.lam, mu)))
            assert all(c.denominator == 1 and c >= 0 for c in coords), f"{mu} is not below {self.lam}"
            depths[mu] = tuple(int(c) for c in coords)
        self.weights: tuple[Weight, ...] = tuple(sorted(expanded, key=lambda mu: (sum(depths[mu]), depths[mu])))
        self.index: dict[Weight, int] = {mu: i for i, mu in enumerate(self.weights)}
        self.mults = np.array([expanded[mu] for mu in self.weights], dtype=np.int64)
        self.depth = np.array([depths[mu] for mu in self.weights], dtype=np.int64).reshape(len(self.weights), rs.rank)
        self.coords = np.array(self.weights, dtype=np.int64).reshape(len(self.weights), rs.rank)
        try:
            self.alpha: Weight | None = marked_root(rs, self.lam)
        except WeightError:
            self.alpha = None
        # (α, α) scaled by the Gram denominator; distances below use the same scale
        self.alpha_sq = rs.inner_scaled(self.alpha, self.alpha) if self.alpha is not None else None
        logger.debug("weight_poset_built", type=str(rs.type), weight=rs.format_weight(self.lam), size=len(self.weights))

    def __len__(self) -> int:
        return len(self.weights)

    @cached_property
    def above(self) -> tuple[frozenset[int], ...]:
        """Indices of the weights strictly above each weight."""
        out = []
        for i in range(len(self.weights)):
            le = np.all(self.depth <= self.depth[i], axis=1)
            le[i] = False
            out.append(frozenset(int(j) for j in np.flatnonzero(le)))
        return tuple(out)

    @cached_property
    def covers(self) -> tuple[frozenset[int], ...]:
        """Indices of the weights μ+β, β a single positive root."""
        out = []
        for mu in self.weights:
            ups = set()
            for beta in self.rs.positive_roots:
                j = self.index.get(tuple(a + b for a, b in zip(mu, beta)))
                if j is not None:
                    ups.add(j)
            out.append(frozenset(ups))
        return tuple(out)

    @cached_property
    def distances(self) -> np.ndarray:
        """‖μ_i − μ_j‖² scaled by the Gram denominator."""
        gram = self.rs.gram_num
        diffs = self.coords[:, None, :] - self.coords[None, :, :]
        return np.einsum("ijk,kl,ijl->ij", diffs, gram, diffs)

    @cached_property
    def roots(self) -> frozenset[Weight]:
        positive = set(self.rs.positive_roots)
        return frozenset(positive | {tuple(-c for c in r) for r in positive})

    def difference(self, i: int, j: int) -> Weight:
        return tuple(int(c) for c in self.coords[i] - self.coords[j])

    def is_long_root_pair(self, i: int, j: int) -> bool:
        """μ_i − μ_j is a root strictly longer than α."""
        return self.difference(i, j) in self.roots and int(self.distances[i, j]) > self.alpha_sq

    def compatible(self, i: int, j: int, max_diameter: int = 2) -> bool:
        """Pair condition of the extremal eigenspace: distance at most max_diameter·(α,α), no long-root difference."""
        if i == j:
            return True
        return int(self.distances[i, j]) <= max_diameter * self.alpha_sq and not self.is_long_root_pair(i, j)


@lru_cache(maxsize=64)
def weight_poset(rs: RootSystem, lam: Weight) -> WeightPoset:
    return WeightPoset(rs, lam)


@dataclass(frozen=True)
class WeightSubset:
    """A multiset of weights of V_λ, multiplicities bounded by the character."""

    poset: WeightPoset
    counts: tuple[tuple[int, int], ...]  # (poset index, multiplicity), sorted by index

    @classmethod
    def of(cls, rs: RootSystem, lam: Weight, weights: Iterable[Weight] | Mapping[Weight, int]) -> WeightSubset:
        poset = weight_poset(rs, rs.require_dominant(lam))
        if not isinstance(weights, Mapping):
            tally: dict[Weight, int] = {}
            for mu in weights:
                mu = tuple(mu)
                tally[mu] = tally.get(mu, 0) + 1
            weights = tally
        counts = {}
        for mu, n in weights.items():
            mu = rs.validate(mu)
            if mu not in poset.index:
                raise WeightError(f"{list(mu)} is not a weight of V_{rs.format_weight(lam)}")
            i = poset.index[mu]
            if n < 1 or n > poset.mults[i]:
                raise WeightError(f"{list(mu)} taken {n} times, multiplicity is {int(poset.mults[i])}")
            counts[i] = n
        return cls(poset, tuple(sorted(counts.items())))

    @classmethod
    def from_indices(cls, poset: WeightPoset, counts: Mapping[int, int]) -> WeightSubset:
        return cls(poset, tuple(sorted(counts.items())))

    @property
    def cardinality(self) -> int:
        return sum(n for _, n in self.counts)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.counts)

    @property
    def weights(self) -> list[Weight]:
        return [self.poset.weights[i] for i, _ in self.counts]

    def weight_sum(self) -> Weight:
        total = np.zeros(self.poset.rs.rank, dtype=np.int64)
        for i, n in self.counts:
            total += n * self.poset.coords[i]
        return tuple(int(c) for c in total)

    def __str__(self) -> str:
        rs = self.poset.rs
        parts = [rs.format_weight(self.poset.weights[i]) + (f"x{n}" if n > 1 else "") for i, n in self.counts]
        return "{" + ", ".join(parts) + "}"


def is_complete(subset: WeightSubset) -> bool:
    """Closure under adding any nonzero sum of positive roots that stays a weight."""
    support = subset.support
    return all(subset.poset.above[i] <= support for i in support)


def is_complete_single_step(subset: WeightSubset) -> bool:
    """Closure under adding a single positive root."""
    support = subset.support
    return all(subset.poset.covers[i] <= support for i in support)


def diameter(subset: WeightSubset) -> int:
    """Least integer δ with ‖μ − μ′‖² ≤ δ(α, α) on the subset."""
    poset = subset.poset
    if poset.alpha_sq is None:
        raise WeightError(f"diameter needs a fundamental or adjoint highest weight, got {poset.rs.format_weight(poset.lam)}")
    idx = sorted(subset.support)
    if len(idx) < 2:
        return 0
    block = poset.distances[np.ix_(idx, idx)]
    top = int(block.max())
    return -(-top // poset.alpha_sq)


def full_subset(rs: RootSystem, lam: Weight) -> WeightSubset:
    poset = weight_poset(rs, rs.require_dominant(lam))
    return WeightSubset.from_indices(poset, {i: int(m) for i, m in enumerate(poset.mults)})


State = tuple[tuple[int, int], ...]


def _levels(poset: WeightPoset, max_diameter: int | None) -> Iterator[set[State]]:
    """Complete multisets of size 1, 2, ... grown one weight at a time from {λ}; stops at the first empty size."""
    if max_diameter is not None and poset.alpha_sq is None:
        raise WeightError(f"diameter bounds need a fundamental or adjoint highest weight, got {poset.rs.format_weight(poset.lam)}")
    level: set[State] = {((0, 1),)}
    size = 1
    while level:
        yield level
        # a weight can only join once everything above it is present
        candidates = [i for i in range(len(poset)) if len(poset.above[i]) <= size]
        grown: set[State] = set()
        for state in level:
            counts = dict(state)
            support = set(counts)
            for c in candidates:
                have = counts.get(c, 0)
                if have >= poset.mults[c]:
                    continue
                if not have:
                    if not poset.above[c] <= support:
                        continue
                    if max_diameter is not None and not all(poset.compatible(c, s, max_diameter) for s in support):
                        continue
                nxt = dict(counts)
                nxt[c] = have + 1
                grown.add(tuple(sorted(nxt.items())))
        level = grown
        size += 1


def complete_subsets(poset: WeightPoset, k: int, max_diameter: int | None = 2) -> list[WeightSubset]:
    """
    Complete k-multisets of weights.

    With ``max_diameter`` set, every pair must satisfy ``WeightPoset.compatible``.
    """
    if k < 1:
        return []
    for size, level in enumerate(_levels(poset, max_diameter), start=1):
        if size == k:
            return sorted((WeightSubset(poset, state) for state in level), key=lambda s: s.counts)
    return []


def largest_complete_size(poset: WeightPoset, max_diameter: int | None = 2) -> int:
    """Largest k admitting a complete k-multiset under the pair condition (removing a minimal weight keeps one of size k−1)."""
    size = 0
    for size, _ in enumerate(_levels(poset, max_diameter), start=1):
        pass
    return size
