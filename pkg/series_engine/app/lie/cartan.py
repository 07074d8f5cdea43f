"""
Dynkin data in Bourbaki numbering.

Types are parsed from strings such as ``E6``, ``A1xA1xA1`` or ``A1xB3``; every
simple factor carries its Cartan matrix and the squared lengths of its simple
roots, normalized so that long roots have length 2.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from app.errors import InvalidAlgebraError

_FACTOR_RE = re.compile(r"^([A-Ga-g])(\d+)$")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_EXCEPTIONAL_WEYL_ORDERS = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}


@dataclass(frozen=True, order=True)
class SimpleFactor:
    family: str
    rank: int

    def __post_init__(self):
        if self.family in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[self.family]:
                raise InvalidAlgebraError(f"{self.family}{self.rank}: rank must be one of {_FIXED_RANKS[self.family]}")
        elif self.family in _MIN_RANK:
            if self.rank < _MIN_RANK[self.family]:
                raise InvalidAlgebraError(f"{self.family}{self.rank}: rank must be >= {_MIN_RANK[self.family]}")
        else:
            raise InvalidAlgebraError(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def is_simply_laced(self) -> bool:
        return self.family in "ADE"

    def edges(self) -> list[tuple[int, int]]:
        """Bonds of the Dynkin diagram as 0-based node pairs."""
        n, f = self.rank, self.family
        if f == "E":
            return [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        if f == "D":
            chain = [(i, i + 1) for i in range(n - 2)]
            return chain + [(n - 3, n - 1)]
        return [(i, i + 1) for i in range(n - 1)]

    def root_norms(self) -> list[Fraction]:
        """Squared lengths (α_i, α_i) with long roots of length 2."""
        n, f = self.rank, self.family
        if f == "B":
            return [Fraction(2)] * (n - 1) + [Fraction(1)]
        if f == "C":
            return [Fraction(1)] * (n - 1) + [Fraction(2)]
        if f == "F":
            return [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
        if f == "G":
            return [Fraction(2, 3), Fraction(2)]
        return [Fraction(2)] * n

    def bilinear_form(self) -> list[list[Fraction]]:
        """Symmetric matrix (α_i, α_j) on the simple roots."""
        norms = self.root_norms()
        n = self.rank
        form = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            form[i][i] = norms[i]
        for i, j in self.edges():
            if norms[i] == norms[j]:
                value = -norms[i] / 2
            else:
                value = -max(norms[i], norms[j]) / 2
            form[i][j] = form[j][i] = value
        return form

    def cartan_matrix(self) -> list[list[int]]:
        """a_ij = 2(α_i, α_j)/(α_j, α_j); row i is α_i in fundamental-weight coordinates."""
        form = self.bilinear_form()
        out = []
        for i in range(self.rank):
            row = []
            for j in range(self.rank):
                value = 2 * form[i][j] / form[j][j]
                assert value.denominator == 1
                row.append(int(value))
            out.append(row)
        return out

    def weyl_group_order(self) -> int:
        n, f = self.rank, self.family
        if f == "A":
            return math.factorial(n + 1)
        if f in "BC":
            return 2**n * math.factorial(n)
        if f == "D":
            return 2 ** (n - 1) * math.factorial(n)
        return _EXCEPTIONAL_WEYL_ORDERS[(f, n)]


@dataclass(frozen=True)
class AlgebraType:
    """A finite product of simple factors; the common case is a single factor."""

    factors: tuple[SimpleFactor, ...]

    def __post_init__(self):
        if not self.factors:
            raise InvalidAlgebraError("an algebra needs at least one simple factor")

    @classmethod
    def parse(cls, text: str) -> AlgebraType:
        parts = [p for p in re.split(r"[x×*]", text.strip().replace(" ", "")) if p]
        if not parts:
            raise InvalidAlgebraError(f"cannot parse algebra {text!r}")
        factors = []
        for part in parts:
            match = _FACTOR_RE.match(part)
            if not match:
                raise InvalidAlgebraError(f"cannot parse algebra factor {part!r} in {text!r}")
            factors.append(SimpleFactor(match.group(1).upper(), int(match.group(2))))
        return cls(tuple(factors))

    @classmethod
    def simple(cls, family: str, rank: int) -> AlgebraType:
        return cls((SimpleFactor(family, rank),))

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)

    @property
    def is_simple(self) -> bool:
        return len(self.factors) == 1

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, start = [], 0
        for f in self.factors:
            out.append(start)
            start += f.rank
        return tuple(out)

    def slices(self) -> list[slice]:
        return [slice(o, o + f.rank) for o, f in zip(self.offsets, self.factors)]


def so_type(n: int) -> SimpleFactor:
    """Bourbaki type of so_n for n >= 5."""
    if n < 5:
        raise InvalidAlgebraError(f"so_{n} is outside the stable range n >= 5")
    return SimpleFactor("B", (n - 1) // 2) if n % 2 else SimpleFactor("D", n // 2)


def classify_component(cartan: list[list[int]] | tuple, nodes) -> tuple[SimpleFactor, list[int]]:
    """
    Recognize the type of a connected subdiagram of a Dynkin diagram.

    Returns the factor and the subdiagram's nodes listed in Bourbaki order.
    Ties between diagram automorphisms are broken by ambient node index.
    """
    nodes = sorted(nodes)
    if not nodes:
        raise InvalidAlgebraError("empty subdiagram")
    nbrs = {v: [u for u in nodes if u != v and cartan[v][u] != 0] for v in nodes}
    if len(nodes) == 1:
        return SimpleFactor("A", 1), nodes

    _check_connected(nodes, nbrs)
    if sum(len(x) for x in nbrs.values()) // 2 != len(nodes) - 1:
        raise InvalidAlgebraError(f"subdiagram on {nodes} is not a tree")

    def bond(u: int, v: int) -> int:
        return cartan[u][v] * cartan[v][u]

    def longer(u: int, v: int) -> bool:
        # |a_uv| > |a_vu| exactly when α_u is the longer root
        return abs(cartan[u][v]) > abs(cartan[v][u])

    n = len(nodes)
    branch = [v for v in nodes if len(nbrs[v]) >= 3]
    if branch:
        b = branch[0]
        arms = sorted((_arm(b, first, nbrs) for first in nbrs[b]), key=lambda arm: (len(arm), arm[0]))
        if len(branch) > 1 or len(arms) != 3 or sum(len(arm) for arm in arms) != n - 1:
            raise InvalidAlgebraError(f"subdiagram on {nodes} has more than one branch point")
        short1, short2, long_arm = arms
        if len(short1) == 1 and len(short2) == 1:
            return SimpleFactor("D", n), list(reversed(long_arm)) + [b, short1[0], short2[0]]
        if len(short1) == 1 and len(short2) == 2 and len(long_arm) in (2, 3, 4):
            if len(long_arm) == 2:
                # E6: the two length-2 arms are interchangeable
                left, right = sorted((short2, long_arm), key=lambda arm: arm[-1])
                order = [left[1], short1[0], left[0], b, right[0], right[1]]
            else:
                order = [short2[1], short1[0], short2[0], b] + long_arm
            return SimpleFactor("E", n), order
        raise InvalidAlgebraError(f"branched subdiagram on {nodes} is not of type D or E")

    ends = [v for v in nodes if len(nbrs[v]) == 1]
    path = _arm(None, min(ends), nbrs)
    bonds = [bond(path[i], path[i + 1]) for i in range(n - 1)]
    if max(bonds) == 1:
        return SimpleFactor("A", n), path
    if max(bonds) == 3:
        first, second = path
        return SimpleFactor("G", 2), ([first, second] if longer(second, first) else [second, first])
    k = bonds.index(2)
    if n == 2:
        a, b = path
        return SimpleFactor("B", 2), ([a, b] if longer(a, b) else [b, a])
    if k == n - 2 or k == 0:
        if k == 0:
            path = list(reversed(path))
        end, inner = path[-1], path[-2]
        family = "C" if longer(end, inner) else "B"
        return SimpleFactor(family, n), path
    if n == 4 and k == 1:
        if not longer(path[1], path[2]):
            path = list(reversed(path))
        return SimpleFactor("F", 4), path
    raise InvalidAlgebraError(f"subdiagram on {nodes} has an interior double bond")


def components(cartan, nodes) -> list[list[int]]:
    """Connected components of the subdiagram spanned by ``nodes``."""
    remaining = set(nodes)
    out = []
    while remaining:
        start = min(remaining)
        comp, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for u in list(remaining):
                if u not in comp and cartan[v][u] != 0:
                    comp.add(u)
                    stack.append(u)
        remaining -= comp
        out.append(sorted(comp))
    return out


def _arm(origin: int | None, first: int, nbrs: dict[int, list[int]]) -> list[int]:
    arm, prev, cur = [first], origin, first
    while True:
        nxt = [u for u in nbrs[cur] if u != prev]
        if len(nxt) != 1:
            return arm
        prev, cur = cur, nxt[0]
        arm.append(cur)


def _check_connected(nodes: list[int], nbrs: dict[int, list[int]]) -> None:
    seen, stack = {nodes[0]}, [nodes[0]]
    while stack:
        for u in nbrs[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(nodes):
        raise InvalidAlgebraError(f"subdiagram on {nodes} is not connected")
