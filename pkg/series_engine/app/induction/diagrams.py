"""
Subdiagram detection on Dynkin diagrams.

A subdiagram embedding records which ambient nodes play the roles of the
pattern's Bourbaki nodes 1..k. Marked patterns (the quadric types of the vector
representation of B_k or D_k, A-chains carrying ω₁) are matched against the
ambient marking through every automorphism of the pattern diagram.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import structlog

from app.errors import InvalidAlgebraError
from app.lie.cartan import AlgebraType, SimpleFactor, classify_component, components
from app.lie.rootsys import RootSystem, Weight

logger = structlog.get_logger()


@dataclass(frozen=True)
class SubdiagramEmbedding:
    rs: RootSystem
    nodes: tuple[int, ...]  # ambient node playing pattern node i
    sub_type: AlgebraType
    label: str = ""

    def __str__(self) -> str:
        name = self.label or str(self.sub_type)
        return f"{name}@{[n + 1 for n in self.nodes]}"

    @property
    def node_set(self) -> frozenset[int]:
        return frozenset(self.nodes)

    def restrict(self, weight: Weight) -> Weight:
        return tuple(weight[n] for n in self.nodes)

    def supports(self, weight: Weight) -> bool:
        return all(c == 0 or i in self.node_set for i, c in enumerate(weight))


@dataclass(frozen=True)
class BorderSet:
    nodes: frozenset[int]

    def __str__(self) -> str:
        return "{" + ",".join(str(n + 1) for n in sorted(self.nodes)) + "}"


def diagram_automorphisms(factor: SimpleFactor) -> list[tuple[int, ...]]:
    """Permutations of the Bourbaki nodes preserving the Cartan matrix."""
    n = factor.rank
    ident = tuple(range(n))
    if factor.family == "A" and n > 1:
        return [ident, tuple(reversed(ident))]
    if factor.family == "D":
        if n == 3:
            return [ident, (0, 2, 1)]
        if n == 4:
            return [(a, 1, b, c) for a, b, c in itertools.permutations((0, 2, 3))]
        return [ident, ident[:-2] + (n - 1, n - 2)]
    if factor.family == "E" and n == 6:
        return [ident, (5, 1, 4, 3, 2, 0)]
    return [ident]


def _pattern_factor(pattern: AlgebraType | SimpleFactor | str) -> SimpleFactor:
    if isinstance(pattern, str):
        pattern = AlgebraType.parse(pattern)
    if isinstance(pattern, AlgebraType):
        if not pattern.is_simple:
            raise InvalidAlgebraError(f"pattern {pattern} is not connected")
        pattern = pattern.factors[0]
    return pattern


def _orderings(rs: RootSystem, nodes: list[int], factor: SimpleFactor) -> list[tuple[int, ...]]:
    """Bourbaki orderings of ``nodes`` as ``factor``, or [] when the type differs."""
    try:
        found, order = classify_component(rs.cartan_rows, nodes)
    except InvalidAlgebraError:
        return []
    if factor.family == "D" and factor.rank == 3:
        if found != SimpleFactor("A", 3):
            return []
        order = [order[1], order[0], order[2]]
    elif found != factor:
        return []
    return [tuple(order[p] for p in perm) for perm in diagram_automorphisms(factor)]


def find_subdiagrams(
    rs: RootSystem,
    pattern: AlgebraType | SimpleFactor | str,
    marking: Weight | None = None,
    pattern_marking: Weight | None = None,
    label: str = "",
) -> list[SubdiagramEmbedding]:
    """
    All embeddings of a connected pattern, one per node set.

    With ``marking`` given, an embedding is kept only when the ambient marking
    restricted to its nodes equals ``pattern_marking`` (default ω₁ of the pattern).
    """
    factor = _pattern_factor(pattern)
    if marking is not None and pattern_marking is None:
        pattern_marking = tuple(1 if i == 0 else 0 for i in range(factor.rank))
    out = []
    if factor.rank > rs.rank:
        return out
    for nodes in itertools.combinations(range(rs.rank), factor.rank):
        if len(components(rs.cartan_rows, nodes)) != 1:
            continue
        for order in _orderings(rs, list(nodes), factor):
            if marking is not None and tuple(marking[n] for n in order) != tuple(pattern_marking):
                continue
            out.append(SubdiagramEmbedding(rs, order, AlgebraType((factor,)), label))
            break
    return out


def border_set(e: SubdiagramEmbedding) -> BorderSet:
    """Ambient nodes outside the subdiagram that are bonded to it."""
    inside = e.node_set
    rows = e.rs.cartan_rows
    return BorderSet(frozenset(v for v in range(e.rs.rank) if v not in inside and any(rows[v][u] for u in inside)))


def a_chains(rs: RootSystem) -> list[tuple[int, ...]]:
    """Every simply-laced path (type A subdiagram), each listed in both directions."""
    out = []
    for k in range(1, rs.rank + 1):
        for e in find_subdiagrams(rs, SimpleFactor("A", k)):
            out.append(e.nodes)
            if k > 1:
                out.append(tuple(reversed(e.nodes)))
    return out


def maximal_subdiagrams(rs: RootSystem, weight: Weight) -> list[SubdiagramEmbedding]:
    """
    For every node outside supp(weight), the component of the remaining diagram
    carrying the support, when the support lies in a single component.
    """
    support = {i for i, c in enumerate(weight) if c}
    out = []
    seen: set[frozenset[int]] = set()
    for v in range(rs.rank):
        if v in support:
            continue
        rest = [u for u in range(rs.rank) if u != v]
        for comp in components(rs.cartan_rows, rest):
            if not support <= set(comp) or frozenset(comp) in seen:
                continue
            seen.add(frozenset(comp))
            factor, order = classify_component(rs.cartan_rows, comp)
            out.append(SubdiagramEmbedding(rs, tuple(order), AlgebraType((factor,)), str(factor)))
    return out
