"""
GL_n → SO_n branching for two-row shapes, and GL_n → SL_n relabeling.

S_{(l,m)}(ℂ^n) restricts to ⊕ c^{(l,m)}_{(2a,2b),(p,q)} S_{[p,q]} over even
two-row shapes (2a, 2b); the labels [p, q] are then written as Bourbaki weights.
"""

from __future__ import annotations

from app.errors import InvalidAlgebraError, WeightError
from app.lie.cartan import so_type
from app.lie.chars import Decomposition
from app.lie.rootsys import Weight, build_root_system
from app.plethysm.littlewood_richardson import lr_coefficient
from app.plethysm.partitions import Partition


def so_label(p: int, q: int, n: int) -> Weight:
    """Bourbaki weight of the so_n module with two-row label [p, q]."""
    if p < q or q < 0:
        raise WeightError(f"[{p},{q}] is not a two-row label")
    factor = so_type(n)
    weight = [0] * factor.rank
    weight[0] = p - q
    if factor.family == "B" and factor.rank == 2:
        weight[1] += 2 * q
    elif factor.family == "D" and factor.rank == 3:
        weight[1] += q
        weight[2] += q
    else:
        weight[1] += q
    return tuple(weight)


def two_row_branching(l: int, m: int) -> dict[tuple[int, int], int]:
    """Multiplicities of the labels [p, q] in the restriction of S_{(l,m)}."""
    if m < 0 or l < m:
        raise WeightError(f"({l},{m}) is not a two-row partition")
    out: dict[tuple[int, int], int] = {}
    for b in range(m // 2 + 1):
        for a in range(b, l // 2 + 1):
            even = Partition((2 * a, 2 * b))
            rest = l + m - 2 * a - 2 * b
            for q in range(rest // 2 + 1):
                p = rest - q
                c = lr_coefficient((l, m), even, (p, q))
                if c:
                    out[(p, q)] = out.get((p, q), 0) + c
    return out


def gl_to_so_two_row(l: int, m: int, n: int) -> Decomposition:
    """S_{(l,m)}(ℂ^n) as an so_n module, n ≥ 5."""
    if n < 5:
        raise InvalidAlgebraError(f"two-row labels are unstable for so_{n}; need n >= 5")
    rs = build_root_system(so_type(n))
    return Decomposition(rs, {so_label(p, q, n): c for (p, q), c in two_row_branching(l, m).items()})


def gl_partition_to_sl(shape, n: int) -> Weight:
    """Highest weight of S_P(ℂ^n) for sl_n: consecutive row differences."""
    shape = Partition(shape)
    if len(shape) > n:
        raise WeightError(f"{shape} has more than {n} rows")
    rows = tuple(shape) + (0,) * (n - len(shape))
    return tuple(rows[i] - rows[i + 1] for i in range(n - 1))
