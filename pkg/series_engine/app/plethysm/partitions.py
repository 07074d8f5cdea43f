"""
Partitions and symmetric-group characters.

Characters of S_k come from the Murnaghan–Nakayama rule on beta-numbers and are
cached per k; Kronecker coefficients are read off the same tables.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from app.errors import WeightError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise WeightError(f"{parts} is not a partition")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        if "," in text:
            return cls(int(x) for x in text.split(",") if x.strip())
        # "21" or "211" shorthand for single-digit parts
        return cls(int(x) for x in text)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        if all(p < 10 for p in self):
            return "".join(str(p) for p in self) or "0"
        return ",".join(str(p) for p in self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def hooks(self) -> list[int]:
        conj = self.conjugate()
        return [self[i] - j + conj[j] - i - 1 for i in range(len(self)) for j in range(self[i])]

    def gl_dimension(self, d: int) -> int:
        """dim S_P(ℂ^d) by the hook-content formula."""
        if len(self) > d:
            return 0
        num = math.prod(d + j - i for i in range(len(self)) for j in range(self[i]))
        return num // math.prod(self.hooks())

    def beta_numbers(self, length: int) -> tuple[int, ...]:
        padded = tuple(self) + (0,) * (length - len(self))
        return tuple(padded[i] + length - 1 - i for i in range(length))

    def z(self) -> int:
        """Centralizer order of the cycle type ``self``."""
        return math.prod(i**m * math.factorial(m) for i, m in Counter(self).items())

    def class_size(self) -> int:
        return math.factorial(self.size) // self.z()


def partitions_of(k: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """Partitions of k in reverse lexicographic order."""
    max_part = k if max_part is None else max_part

    def rec(rest: int, bound: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield prefix
            return
        if max_length is not None and len(prefix) >= max_length:
            return
        for p in range(min(rest, bound), 0, -1):
            yield from rec(rest - p, p, prefix + (p,))

    for parts in rec(k, max_part, ()):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    r, rest = cycles[0], cycles[1:]
    members = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in members:
            continue
        # sign from the beads jumped over
        height = sum(1 for x in beta if target < x < b)
        new_beta = tuple(sorted((target if x == b else x for x in beta), reverse=True))
        total += (-1) ** height * _mn(new_beta, rest)
    return total


def mn_character(shape: Partition, cycle_type: Partition) -> int:
    """χ_shape(cycle_type) by Murnaghan–Nakayama."""
    if shape.size != cycle_type.size:
        raise WeightError(f"{shape} and {cycle_type} have different sizes")
    return _mn(shape.beta_numbers(len(shape)), tuple(sorted(cycle_type, reverse=True)))


class SymGroupCharTable:
    """Character table of S_k, rows by shape, columns by cycle type."""

    def __init__(self, k: int):
        self.k = k
        self.shapes: list[Partition] = list(partitions_of(k))
        self.classes: list[Partition] = list(self.shapes)
        self.values: dict[tuple[Partition, Partition], int] = {
            (p, c): mn_character(p, c) for p in self.shapes for c in self.classes
        }

    def __repr__(self) -> str:
        return f"SymGroupCharTable(k={self.k})"

    def value(self, shape: Partition, cycle_type: Partition) -> int:
        return self.values[(Partition(shape), Partition(cycle_type))]

    def class_size(self, cycle_type: Partition) -> int:
        return Partition(cycle_type).class_size()

    @cached_property
    def identity(self) -> Partition:
        return Partition((1,) * self.k)

    def irr_dimension(self, shape: Partition) -> int:
        return self.value(shape, self.identity)

    def kronecker(self, p: Partition, q: Partition, r: Partition) -> int:
        """g_{pqr}: multiplicity of the trivial character in χ_p χ_q χ_r."""
        total = sum(self.class_size(c) * self.value(p, c) * self.value(q, c) * self.value(r, c) for c in self.classes)
        order = math.factorial(self.k)
        assert total % order == 0
        return total // order

    def orthogonality_defects(self) -> list[str]:
        """Row and column orthogonality failures; empty for a correct table."""
        order = math.factorial(self.k)
        defects = []
        for p in self.shapes:
            for q in self.shapes:
                total = sum(self.class_size(c) * self.value(p, c) * self.value(q, c) for c in self.classes)
                if total != (order if p == q else 0):
                    defects.append(f"row {p},{q}: {total}")
        for c in self.classes:
            for d in self.classes:
                total = sum(self.value(p, c) * self.value(p, d) for p in self.shapes)
                expected = Partition(c).z() if c == d else 0
                if total != expected:
                    defects.append(f"column {c},{d}: {total}")
        return defects


@lru_cache(maxsize=None)
def char_table(k: int) -> SymGroupCharTable:
    return SymGroupCharTable(k)
