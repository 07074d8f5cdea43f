"""
Littlewood–Richardson coefficients by tableau enumeration.

c^λ_{μν} counts semistandard fillings of the skew shape λ/μ with content ν
whose reverse reading word (rows top to bottom, each row right to left) is a
lattice word. The filling is built cell by cell in that reading order with
backtracking.
"""

from __future__ import annotations

from functools import lru_cache

from app.plethysm.partitions import Partition, partitions_of


def _contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(inner[i] <= outer[i] for i in range(len(inner)))


@lru_cache(maxsize=100_000)
def _count(outer: tuple[int, ...], inner: tuple[int, ...], content: tuple[int, ...]) -> int:
    inner_padded = inner + (0,) * (len(outer) - len(inner))
    cells = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner_padded[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * len(content)

    def place(pos: int) -> int:
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        right = filling.get((r, c + 1))
        above = filling.get((r - 1, c))
        total = 0
        for v in range(len(content)):
            if counts[v] >= content[v]:
                continue
            # lattice condition: never more v's than (v−1)'s so far
            if v > 0 and counts[v] + 1 > counts[v - 1]:
                continue
            if right is not None and v > right:
                continue
            if above is not None and v <= above:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            total += place(pos + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return place(0)


def lr_coefficient(lam, mu, nu) -> int:
    """c^λ_{μν}, the multiplicity of S_λ in S_μ ⊗ S_ν."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size or not _contains(lam, mu) or not _contains(lam, nu):
        return 0
    if not nu:
        return 1
    return _count(tuple(lam), tuple(mu), tuple(nu))


def lr_product(mu, nu, max_rows: int | None = None) -> dict[Partition, int]:
    """All nonzero c^λ_{μν}, optionally truncated to λ with at most ``max_rows`` rows (GL_n)."""
    mu, nu = Partition(mu), Partition(nu)
    rows = len(mu) + len(nu)
    if max_rows is not None:
        rows = min(rows, max_rows)
    out = {}
    for lam in partitions_of(mu.size + nu.size, max_length=rows):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    return out
