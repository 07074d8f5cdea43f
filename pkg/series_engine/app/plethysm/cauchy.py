"""Cauchy decompositions of symmetric powers of tensor products."""

from __future__ import annotations

from app.config import get_settings
from app.errors import BudgetExceededError, WeightError
from app.plethysm.partitions import Partition, char_table, partitions_of


def cauchy_sym(k: int, factors: list[int], max_degree: int | None = None) -> list[tuple[tuple[Partition, ...], int]]:
    """
    S^k(A⊗B) = ⊕_{|P|=k} S_P A ⊗ S_P B, and for three factors
    S^k(A⊗B⊗C) = ⊕ g_{PQR} S_P A ⊗ S_Q B ⊗ S_R C with g the Kronecker coefficient.

    Shapes longer than the corresponding factor dimension vanish and are dropped.
    """
    if len(factors) not in (2, 3):
        raise WeightError("cauchy_sym handles two or three tensor factors")
    bound = max_degree if max_degree is not None else max(get_settings().max_plethysm_degree, 10)
    if k > bound:
        raise BudgetExceededError("cauchy_sym degree", k, bound)
    shapes = list(partitions_of(k))
    if len(factors) == 2:
        a, b = factors
        return [((p, p), 1) for p in shapes if len(p) <= min(a, b)]
    table = char_table(k)
    out = []
    for p in shapes:
        if len(p) > factors[0]:
            continue
        for q in shapes:
            if len(q) > factors[1]:
                continue
            for r in shapes:
                if len(r) > factors[2]:
                    continue
                g = table.kronecker(p, q, r)
                if g:
                    out.append(((p, q, r), g))
    return out


def cauchy_dimension(terms: list[tuple[tuple[Partition, ...], int]], factors: list[int]) -> int:
    total = 0
    for shapes, mult in terms:
        dim = mult
        for shape, d in zip(shapes, factors):
            dim *= Partition(shape).gl_dimension(d)
        total += dim
    return total
