"""
Extremal eigenspace batteries.

Each battery returns CheckRecords like the series batteries; budget overruns
become ``skipped-budget`` records.
"""

from __future__ import annotations

import time
from typing import Callable

from app.errors import BudgetExceededError
from app.extremal.subsets import diameter, full_subset, weight_poset
from app.extremal.vk import (
    a_series_lower_bound,
    chain_distance,
    extremal_row,
    fano_subdiagrams,
    is_minuscule,
    max_casimir_bruteforce,
    minuscule_dichotomy_check,
    v2_irreducibility_check,
    vk_components,
    vk_regime,
)
from app.lie.chars import CasimirNormalization, weyl_dimension
from app.lie.rootsys import RootSystem, Weight, build_root_system
from app.schemas.report import CheckRecord
from app.series.verify import format_terms, skipped_record, status_for

MINUSCULE_BATTERY: tuple[tuple[str, Weight], ...] = (
    ("A3", (1, 0, 0)),
    ("A3", (0, 1, 0)),
    ("A4", (0, 1, 0, 0)),
    ("B3", (0, 0, 1)),
    ("C3", (1, 0, 0)),
    ("D5", (0, 0, 0, 0, 1)),
    ("D6", (0, 0, 0, 0, 0, 1)),
    ("E6", (1, 0, 0, 0, 0, 0)),
    ("E7", (0, 0, 0, 0, 0, 0, 1)),
)

CHAIN_BATTERY: tuple[tuple[str, Weight], ...] = (
    ("A5", (1, 0, 0, 0, 0)),
    ("A5", (0, 1, 0, 0, 0)),
    ("A5", (0, 0, 1, 0, 0)),
    ("A5", (0, 0, 0, 1, 0)),
    ("A5", (0, 0, 0, 0, 1)),
    ("B4", (1, 0, 0, 0)),
    ("D5", (0, 1, 0, 0, 0)),
    ("D5", (0, 0, 1, 0, 0)),
)

ADJOINT_BATTERY = ("G2", "A3", "B3", "C3", "F4")

V2_BATTERY = ("A4", "B3", "C3", "D5", "G2", "F4")

# δ of the full weight set
DIAMETERS: tuple[tuple[str, Weight, int], ...] = (
    *((f"A{l}", tuple(1 if j == i - 1 else 0 for j in range(l)), i) for l in range(2, 6) for i in range(1, (l + 1) // 2 + 1)),
    ("C3", (1, 0, 0), 2),
    ("B3", (0, 0, 1), 3),
    ("B4", (0, 0, 0, 1), 4),
    ("D4", (0, 0, 0, 1), 2),
    ("D5", (0, 0, 0, 0, 1), 2),
    ("D6", (0, 0, 0, 0, 0, 1), 3),
    ("E6", (1, 0, 0, 0, 0, 0), 2),
    ("E7", (0, 0, 0, 0, 0, 0, 1), 3),
)


def _elapsed(start: float) -> float:
    return round(time.perf_counter() - start, 3)


def _degrees(rs: RootSystem, lam: Weight, k_max: int) -> range:
    """Degrees inside the proven range; small modules are swept completely."""
    dim = weyl_dimension(rs, lam)
    top = dim if dim <= 8 else min(k_max, dim)
    support = [i for i, c in enumerate(lam) if c]
    k1 = chain_distance(rs, support[0])
    if vk_regime(rs, lam, top) is None and k1 is not None:
        top = min(top, k1 + 2)
    return range(1, top + 1)


def check_theta_vk(k_max: int = 3, budget: int | None = None) -> list[CheckRecord]:
    """θ_{V_k} and the complete-subset components against the full decomposition of Λ^k V."""
    records = []
    anchor = "maximal Casimir eigenspace of Λ^k V"
    for name, lam in MINUSCULE_BATTERY + CHAIN_BATTERY:
        rs = build_root_system(name)
        for k in _degrees(rs, lam, k_max):
            start = time.perf_counter()
            record_id = f"vk/{name}/{rs.format_weight(lam)}/k={k}"
            try:
                row = extremal_row(rs, lam, k, budget=budget)
            except BudgetExceededError as e:
                records.append(skipped_record(record_id, anchor, e, start))
                continue
            records.append(
                CheckRecord(
                    id=record_id,
                    anchor=anchor,
                    status=status_for(bool(row.agrees)),
                    left=row.predicted,
                    right=row.eigenspace,
                    casimirs={"theta_formula": row.theta_formula, "theta_bruteforce": row.theta_bruteforce or ""},
                    note=row.note,
                    elapsed_seconds=_elapsed(start),
                )
            )
    return records


def check_adjoint_theta(k_max: int = 3, budget: int | None = None) -> list[CheckRecord]:
    """The top Casimir eigenvalue of Λ^k g is k in the Killing normalization."""
    records = []
    anchor = "θ(g_k) = k"
    for name in ADJOINT_BATTERY:
        rs = build_root_system(name)
        lam = rs.adjoint_weight()
        for k in range(1, k_max + 1):
            start = time.perf_counter()
            record_id = f"theta-gk/{name}/k={k}"
            try:
                value, top = max_casimir_bruteforce(rs, lam, k, norm=CasimirNormalization.KILLING, budget=budget)
            except BudgetExceededError as e:
                records.append(skipped_record(record_id, anchor, e, start))
                continue
            records.append(
                CheckRecord(
                    id=record_id,
                    anchor=anchor,
                    status=status_for(value == k),
                    left=format_terms(top),
                    casimirs={"top": str(value)},
                    elapsed_seconds=_elapsed(start),
                )
            )
    return records


def minuscule_cases(max_rank: int = 6) -> list[tuple[str, Weight]]:
    """Every minuscule fundamental weight up to ``max_rank``, plus E7 ω7."""
    names = [f"{family}{l}" for family, low in (("A", 1), ("B", 2), ("C", 2), ("D", 4)) for l in range(low, max_rank + 1)]
    names += ["E6"] if max_rank >= 6 else []
    cases = []
    for name in names:
        rs = build_root_system(name)
        cases.extend((name, lam) for lam in map(rs.fundamental_weight, range(rs.rank)) if is_minuscule(rs, lam))
    cases.append(("E7", (0, 0, 0, 0, 0, 0, 1)))
    return cases


def check_dichotomy(max_rank: int = 6) -> list[CheckRecord]:
    records = []
    for name, lam in minuscule_cases(max_rank):
        start = time.perf_counter()
        rs = build_root_system(name)
        result = minuscule_dichotomy_check(rs, lam)
        records.append(
            CheckRecord(
                id=f"dichotomy/{name}/{rs.format_weight(lam)}",
                anchor="distance dichotomy for minuscule weights",
                status=status_for(result.holds),
                left=[f"{list(a)} / {list(b)}" for a, b in result.violations[:10]],
                note=f"{result.pairs} pairs, {result.long_root_pairs} differ by a root longer than α",
                elapsed_seconds=_elapsed(start),
            )
        )
    return records


def check_diameters() -> list[CheckRecord]:
    records = []
    for name, lam, expected in DIAMETERS:
        start = time.perf_counter()
        rs = build_root_system(name)
        found = diameter(full_subset(rs, lam))
        records.append(
            CheckRecord(
                id=f"diameter/{name}/{rs.format_weight(lam)}",
                anchor="diameter of the weight set",
                status=status_for(found == expected),
                left=[str(found)],
                right=[str(expected)],
                elapsed_seconds=_elapsed(start),
            )
        )
    return records


def check_completeness() -> list[CheckRecord]:
    """Closure under single positive roots gives the same up-sets as closure under sums of them."""
    records = []
    battery = list(MINUSCULE_BATTERY) + [("A2", (1, 1)), ("G2", (0, 1))]
    for name, lam in battery:
        start = time.perf_counter()
        rs = build_root_system(name)
        poset = weight_poset(rs, lam)
        mismatched = []
        for i in range(len(poset)):
            reached = {i}
            frontier = [i]
            while frontier:
                frontier = [j for f in frontier for j in poset.covers[f] if j not in reached]
                reached.update(frontier)
            if reached - {i} != poset.above[i]:
                mismatched.append(rs.format_weight(poset.weights[i]))
        records.append(
            CheckRecord(
                id=f"completeness/{name}/{rs.format_weight(lam)}",
                anchor="complete subsets: single roots against sums of positive roots",
                status=status_for(not mismatched),
                left=mismatched[:10],
                note=f"{len(poset)} weights",
                elapsed_seconds=_elapsed(start),
            )
        )
    return records


def check_v2(budget: int | None = None) -> list[CheckRecord]:
    """V_2 is irreducible with highest weight 2λ − α for every fundamental weight."""
    records = []
    anchor = "irreducibility of V_2"
    cases = [(name, build_root_system(name).fundamental_weight(i)) for name in V2_BATTERY for i in range(build_root_system(name).rank)]
    cases.append(("E6", (1, 0, 0, 0, 0, 0)))
    for name, lam in cases:
        start = time.perf_counter()
        rs = build_root_system(name)
        record_id = f"v2/{name}/{rs.format_weight(lam)}"
        try:
            single, top, expected = v2_irreducibility_check(rs, lam, budget=budget)
        except BudgetExceededError as e:
            records.append(skipped_record(record_id, anchor, e, start))
            continue
        records.append(
            CheckRecord(
                id=record_id,
                anchor=anchor,
                status=status_for(single and expected in top),
                left=format_terms(top),
                right=[rs.format_weight(expected)],
                elapsed_seconds=_elapsed(start),
            )
        )
    return records


def check_fano(k_max: int = 4) -> list[CheckRecord]:
    """Every (A_{k−1}, ω₁) subdiagram through the marked node yields a component of V_k."""
    records = []
    anchor = "Fano subdiagrams detect components of V_k"
    for name, lam in MINUSCULE_BATTERY + CHAIN_BATTERY:
        rs = build_root_system(name)
        for k in range(2, k_max + 1):
            if vk_regime(rs, lam, k) is None:
                continue
            start = time.perf_counter()
            components = vk_components(rs, lam, k)
            found = fano_subdiagrams(rs, lam, k)
            missing = [rs.format_weight(w) for _, w in found if w not in components]
            records.append(
                CheckRecord(
                    id=f"fano/{name}/{rs.format_weight(lam)}/k={k}",
                    anchor=anchor,
                    status=status_for(not missing),
                    left=[f"{e}: {rs.format_weight(w)}" for e, w in found],
                    right=format_terms(components),
                    note=f"missing {', '.join(missing)}" if missing else "",
                    elapsed_seconds=_elapsed(start),
                )
            )
    return records


def check_k0(l_max: int = 4) -> list[CheckRecord]:
    """k₀ > i(l+1−i) on A_l ω_i; the conjectured equality is reported, not required."""
    records = []
    for l in range(1, l_max + 1):
        for i in range(1, l + 1):
            start = time.perf_counter()
            bound = a_series_lower_bound(l, i)
            conjecture = "holds" if bound.conjecture_holds else "fails"
            records.append(
                CheckRecord(
                    id=f"k0/A{l}/omega{i}",
                    anchor="lower bound for k₀ on fundamental representations of A_l",
                    status=status_for(bound.bound_holds),
                    left=[str(bound.subset)],
                    dims={"subset": bound.subset.cardinality, "k0": bound.k0, "conjectured_k0": bound.conjecture},
                    note=f"diameter {bound.diameter}; k0 = i(l+1-i)+1 {conjecture}",
                    elapsed_seconds=_elapsed(start),
                )
            )
    return records


BATTERIES: dict[str, Callable[..., list[CheckRecord]]] = {
    "vk": lambda **kw: check_theta_vk(budget=kw.get("budget")),
    "theta-gk": lambda **kw: check_adjoint_theta(budget=kw.get("budget")),
    "lemma-dichotomy": lambda **kw: check_dichotomy(),
    "diameter": lambda **kw: check_diameters(),
    "completeness": lambda **kw: check_completeness(),
    "v2": lambda **kw: check_v2(budget=kw.get("budget")),
    "fano": lambda **kw: check_fano(),
    "k0": lambda **kw: check_k0(),
}
