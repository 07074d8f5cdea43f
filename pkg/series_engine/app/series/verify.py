"""
Series verification.

Every check returns CheckRecords. Tabled identities, role formulas and
generating functions are read from the series tables; the remaining checks are
fixed batteries keyed by a battery id (``vogel-dim``, ``mu-lemma``, ...).
A budget overrun becomes a ``skipped-budget`` record, never an exception.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Callable

import structlog

from app.config import get_settings
from app.errors import BudgetExceededError, FormulaPoleError, InductionError, SeriesDataError
from app.induction.diagrams import maximal_subdiagrams
from app.induction.induced import (
    PlethysmOp,
    aad_chains,
    achain_induced,
    check_support,
    induce_decomposition,
    largest_quadric,
    quadric_induced,
    sub_root_system,
    verify_prop22,
)
from app.lie.chars import CasimirNormalization, Decomposition, casimir, decompose_character, tensor_decompositions, weyl_dimension
from app.lie.rootsys import RootSystem, Weight, build_root_system
from app.plethysm.branching import so_label
from app.schemas.report import CheckRecord, CheckStatus
from app.schemas.series import GeneratorModel, GFModel, IdentityModel
from app.series.formulas import (
    MAGIC_SQUARE,
    VOGEL_POINTS,
    VOGEL_ROWS,
    evaluate,
    has_casimir_formula,
    has_dimension_formula,
    magic_dim,
    magic_dim_pq,
    mu_closed_form,
    scorza_dim,
    series_casimir,
    series_dimension,
    vogel_casimir,
    vogel_row_dim,
    vogel_row_simplifies,
)
from app.series.generating import (
    HYPERMATRIX_FORMS,
    SLSO_FORMS,
    Series,
    direct_sym_series,
    expand_gf,
    first_difference,
    gf_from_model,
    hypermatrix_rs,
    hypermatrix_series,
    mu_bruteforce,
    scorza_gf,
    scorza_module,
    sl3_gf,
    sl3_gf_cauchy,
    slso_direct,
    slso_gf,
    truncation,
)
from app.series.tables import SeriesEntry, SeriesTable, evaluate_terms, load_series

logger = structlog.get_logger()

KILLING = CasimirNormalization.KILLING

MATCH = CheckStatus.MATCH
DIFF = CheckStatus.DIFF
SKIPPED = CheckStatus.SKIPPED_BUDGET
OPEN = CheckStatus.EXPECTED_OPEN_QUESTION
INFO = CheckStatus.INFO


def status_for(ok: bool) -> CheckStatus:
    return MATCH if ok else DIFF


def format_terms(d: Decomposition) -> list[str]:
    out = []
    for mu, m, dim in d.dims():
        coeff = "" if m == 1 else f"{m}·"
        out.append(f"{coeff}{d.rs.format_weight(mu)}({dim})")
    return out


def _casimirs(d: Decomposition, norm: CasimirNormalization | str | None = None) -> dict[str, str]:
    norm = norm or get_settings().casimir_norm
    return {d.rs.format_weight(mu): str(casimir(d.rs, mu, norm)) for mu, _ in d.sorted_items()}


def skipped_record(record_id: str, anchor: str, exc: BudgetExceededError, start: float) -> CheckRecord:
    logger.info("check_skipped", id=record_id, what=exc.what, estimate=exc.estimate, limit=exc.limit)
    return CheckRecord(
        id=record_id,
        anchor=anchor,
        status=SKIPPED,
        note=str(exc),
        elapsed_seconds=round(time.perf_counter() - start, 3),
    )


def _record_id(entry: SeriesEntry, what: str) -> str:
    return f"{entry.series}/m={entry.m}/{what}"


# ----------------------------------------------------------------------
# Tabled identities
# ----------------------------------------------------------------------

_LHS_KINDS = ("ext", "sym", "schur", "tensor")


def evaluate_lhs(entry: SeriesEntry, lhs: str, budget: int | None = None) -> Decomposition:
    """``ext k X``, ``sym k X``, ``schur P X`` or ``tensor X Y`` with X, Y role expressions."""
    tokens = lhs.split()
    if len(tokens) != 3 or tokens[0] not in _LHS_KINDS:
        raise SeriesDataError(f"cannot parse identity left side {lhs!r}")
    kind, first, second = tokens
    if kind == "tensor":
        return tensor_decompositions(entry.expression(first), entry.expression(second))
    module = entry.expression(second)
    if module.is_virtual:
        raise SeriesDataError(f"{lhs!r}: plethysm of the virtual module {module.format()}")
    op = PlethysmOp.parse(kind, first)
    return decompose_character(op.of_character(module.character(), budget=budget))


def lhs_degree(lhs: str) -> int:
    """Tensor degree of an identity left side in its role modules."""
    tokens = lhs.split()
    if len(tokens) != 3 or tokens[0] not in _LHS_KINDS:
        raise SeriesDataError(f"cannot parse identity left side {lhs!r}")
    if tokens[0] == "tensor":
        return 2
    return PlethysmOp.parse(tokens[0], tokens[1]).degree


def is_ambient_cube(lhs: str) -> bool:
    """Degree-3-or-more plethysm of the adjoint module g."""
    return lhs_degree(lhs) >= 3 and lhs.split()[-1] == "g"


def verify_identity(entry: SeriesEntry, ident: IdentityModel, budget: int | None = None) -> CheckRecord:
    record_id = _record_id(entry, ident.id)
    start = time.perf_counter()
    cube_rank = get_settings().ambient_cube_max_rank
    if is_ambient_cube(ident.lhs) and entry.rs.rank > cube_rank:
        logger.info("check_skipped", id=record_id, rank=entry.rs.rank, limit=cube_rank)
        return CheckRecord(
            id=record_id,
            anchor=ident.anchor,
            status=SKIPPED,
            note=f"{ident.lhs} on rank {entry.rs.rank} exceeds ambient_cube_max_rank {cube_rank}",
        )
    try:
        lhs = evaluate_lhs(entry, ident.lhs, budget)
    except BudgetExceededError as e:
        return skipped_record(record_id, ident.anchor, e, start)
    rhs = evaluate_terms(entry, ident.rhs)
    rest = lhs - rhs
    dims: dict[str, int | str] = {"lhs": lhs.total_dim(), "rhs": rhs.total_dim()}
    if ident.kind == "equal":
        ok = not rest
    elif ident.kind == "contains":
        ok = not rest.is_virtual
    else:
        ok = not rest.is_virtual and sum(rest.terms.values()) <= ident.residual_roles
        dims["residual"] = rest.total_dim()

    notes = [ident.note] if ident.note else []
    if ident.kind != "equal" or not ok:
        notes.append(f"lhs - rhs = {rest.format()}")
    if ok:
        status = MATCH
        if ident.expected == "open-question":
            notes.append("closes although tabled as open")
    else:
        status = OPEN if ident.expected == "open-question" else DIFF

    record = CheckRecord(
        id=record_id,
        anchor=ident.anchor,
        status=status,
        left=format_terms(lhs),
        right=format_terms(rhs),
        dims=dims,
        casimirs=_casimirs(lhs),
        note="; ".join(notes),
        elapsed_seconds=round(time.perf_counter() - start, 3),
    )
    logger.info("identity_checked", id=record_id, status=status.value, elapsed=record.elapsed_seconds)
    return record


# ----------------------------------------------------------------------
# Role formulas
# ----------------------------------------------------------------------


def verify_role_dimensions(entry: SeriesEntry) -> list[CheckRecord]:
    """dim formula = Σ sign·dim over the role's weights, for every role with a formula."""
    records = []
    for name in entry.roles:
        if not has_dimension_formula(entry.series, name):
            continue
        record_id = _record_id(entry, f"dim-{name}")
        anchor = f"{entry.series} dimension formulas"
        actual = entry.role(name).total_dim()
        try:
            expected = series_dimension(entry.series, name, entry.m)
        except FormulaPoleError as e:
            records.append(CheckRecord(id=record_id, anchor=anchor, status=INFO, dims={"tabled": actual}, note=str(e)))
            continue
        note = ""
        printed = series_dimension(entry.series, name, entry.m, printed=True)
        if printed != expected:
            note = f"printed formula gives {printed}"
        if name in entry.corrections:
            note = "; ".join(filter(None, [note, f"printed table: {entry.corrections[name]}"]))
        records.append(
            CheckRecord(
                id=record_id,
                anchor=anchor,
                status=status_for(expected == actual),
                left=format_terms(entry.role(name)),
                dims={"formula": str(expected), "tabled": actual},
                note=note,
            )
        )
    return records


def _casimir_roles(entry: SeriesEntry) -> list[str]:
    names = [n for n in entry.roles if has_casimir_formula(entry.series, n)]
    for base in ("V", "g"):
        if base in entry.roles:
            for k in (2, 3):
                power = f"{base}^({k})"
                if power not in names and has_casimir_formula(entry.series, power):
                    names.append(power)
    return names


def verify_role_casimirs(entry: SeriesEntry) -> list[CheckRecord]:
    """Every weight of a role shares the eigenvalue the Casimir formula predicts (Killing normalization)."""
    records = []
    for name in _casimir_roles(entry):
        module = entry.expression(name)
        if not module:
            continue
        record_id = _record_id(entry, f"casimir-{name}")
        anchor = f"{entry.series} Casimir table"
        values = {entry.rs.format_weight(mu): casimir(entry.rs, mu, KILLING) for mu in module.terms}
        try:
            expected = series_casimir(entry.series, name, entry.m)
        except FormulaPoleError as e:
            records.append(
                CheckRecord(id=record_id, anchor=anchor, status=INFO, casimirs={k: str(v) for k, v in values.items()}, note=str(e))
            )
            continue
        records.append(
            CheckRecord(
                id=record_id,
                anchor=anchor,
                status=status_for(all(v == expected for v in values.values())),
                left=format_terms(module),
                casimirs={"formula": str(expected), **{k: str(v) for k, v in values.items()}},
            )
        )
    return records


# ----------------------------------------------------------------------
# Generating functions
# ----------------------------------------------------------------------


def _series_diff(a: Series, b: Series) -> tuple[int | None, str]:
    d = first_difference(a, b)
    if d is None:
        return None, ""
    return d, f"degree {d}: expansion - direct = {(a[d] - b[d]).format()}"


def verify_generating_function(entry: SeriesEntry, model: GFModel, budget: int | None = None) -> list[CheckRecord]:
    """
    Expand the tabled generating function and compare with decompose(S^k V).

    When the numerator carries corrections, a second record confirms they are
    needed: the uncorrected expansion must first go wrong in the lowest
    correction degree.
    """
    record_id = _record_id(entry, model.id)
    start = time.perf_counter()
    v = entry.role("V")
    degree = truncation(model, entry.m, get_settings().plethysm_degree_for(v.total_dim()))
    try:
        direct = direct_sym_series(entry.rs, v, degree, budget)
    except BudgetExceededError as e:
        return [skipped_record(record_id, model.anchor, e, start)]
    expanded = expand_gf(gf_from_model(entry, model), degree)
    d, note = _series_diff(expanded, direct)
    records = [
        CheckRecord(
            id=record_id,
            anchor=model.anchor,
            status=status_for(d is None),
            left=[f"S^{k}: {direct[k].format()}" for k in range(degree + 1)],
            dims={"max_degree": degree, "top": direct[degree].total_dim()},
            note="; ".join(filter(None, [model.note, note])),
            elapsed_seconds=round(time.perf_counter() - start, 3),
        )
    ]
    corrections = [g.degree for g in model.numerator if g.degree > 0]
    if corrections:
        bare = model.model_copy(update={"numerator": [GeneratorModel(degree=0)]})
        uncorrected = expand_gf(gf_from_model(entry, bare), degree)
        first = first_difference(uncorrected, direct)
        needed = min(corrections)
        ok = first == needed
        records.append(
            CheckRecord(
                id=f"{record_id}-correction",
                anchor=model.anchor,
                status=status_for(ok),
                left=[] if first is None else format_terms(uncorrected[first] - direct[first]),
                dims={"correction_degree": needed, "first_failure": "none" if first is None else first},
                note=f"without the numerator the expansion first differs in degree {first}",
            )
        )
    logger.info("gf_checked", id=record_id, status=records[0].status.value, degree=degree)
    return records


# ----------------------------------------------------------------------
# Tables
# ----------------------------------------------------------------------


def _selected(m: Fraction, ms: list[Fraction] | None) -> bool:
    return ms is None or m in ms


def verify_table(
    series: str,
    m: list[Fraction] | None = None,
    identities: list[str] | None = None,
    budget: int | None = None,
    data_path: str | None = None,
) -> list[CheckRecord]:
    """
    Run the tabled checks of one series.

    With ``identities`` given, only those identity / generating-function ids
    run; otherwise every identity, role formula and generating function does.
    """
    table: SeriesTable = load_series(series, data_path)
    records: list[CheckRecord] = []
    for entry in table.entries:
        if not _selected(entry.m, m):
            continue
        log = logger.bind(series=series, m=str(entry.m), algebra=str(entry.algebra))
        log.info("entry_verification_started")
        if identities is None:
            records.extend(verify_role_dimensions(entry))
            records.extend(verify_role_casimirs(entry))
        for ident in table.identities_for(entry.m):
            if identities is None or ident.id in identities:
                records.append(verify_identity(entry, ident, budget))
        for model in table.generating_functions_for(entry.m):
            if identities is None or model.id in identities:
                records.extend(verify_generating_function(entry, model, budget))
    return records


# ----------------------------------------------------------------------
# Vogel plane and magic square
# ----------------------------------------------------------------------


def adjoint_dimension(rs: RootSystem) -> int:
    return sum(weyl_dimension(rs, theta) for theta in rs.highest_roots)


def check_vogel_dimensions() -> list[CheckRecord]:
    records = []
    for row, points in VOGEL_POINTS.items():
        records.append(
            CheckRecord(
                id=f"vogel-dim/{row}/simplified",
                anchor="Vogel dimension formula on the four lines",
                status=status_for(vogel_row_simplifies(row)),
            )
        )
        for m, algebra in points.items():
            rs = build_root_system(algebra)
            expected = vogel_row_dim(row, m)
            actual = adjoint_dimension(rs)
            records.append(
                CheckRecord(
                    id=f"vogel-dim/{row}/m={m}",
                    anchor="Vogel dimension formula on the four lines",
                    status=status_for(expected == actual),
                    left=[algebra],
                    dims={"formula": str(expected), "adjoint": actual},
                )
            )
    return records


def check_magic_square() -> list[CheckRecord]:
    records = []
    for (a, b), algebra in MAGIC_SQUARE.items():
        ab = magic_dim(a, b)
        pq = magic_dim_pq(a + 4, b + 4)
        actual = adjoint_dimension(build_root_system(algebra))
        records.append(
            CheckRecord(
                id=f"magic-square/a={a},b={b}",
                anchor="magic-square dimension formulas",
                status=status_for(ab == pq == actual),
                left=[algebra],
                dims={"a,b": str(ab), "p,q": str(pq), "adjoint": actual},
            )
        )
    return records


def _vogel_parameters(row: str, m: Fraction) -> tuple[Fraction, Fraction]:
    beta, gamma = VOGEL_ROWS[row]
    return evaluate(beta, m, "β"), evaluate(gamma, m, "γ")


def check_vogel_casimirs(data_path: str | None = None) -> list[CheckRecord]:
    """Killing Casimirs of g^(2), g_Q, g_Q' against 2 − x/(α+β+γ)."""
    records = []
    for series in ("exceptional", "subexceptional"):
        for entry in load_series(series, data_path).entries:
            beta, gamma = _vogel_parameters(series, entry.m)
            for space in ("g^(2)", "g_Q", "g_Q'"):
                if space != "g^(2)" and space not in entry.roles:
                    continue
                module = entry.expression(space)
                if not module:
                    continue
                expected = vogel_casimir(beta, gamma, space)
                values = {entry.rs.format_weight(mu): casimir(entry.rs, mu, KILLING) for mu in module.terms}
                records.append(
                    CheckRecord(
                        id=_record_id(entry, f"vogel-casimir-{space}"),
                        anchor="Casimir eigenvalues of the components of S²g",
                        status=status_for(all(v == expected for v in values.values())),
                        left=format_terms(module),
                        casimirs={"formula": str(expected), **{k: str(v) for k, v in values.items()}},
                    )
                )
    return records


def check_largest_quadric(data_path: str | None = None) -> list[CheckRecord]:
    """
    The largest quadric on the adjoint variety has dimension β on the exceptional
    and orthogonal lines; on the subexceptional line it is one of β, γ.
    """
    records = []
    cases: list[tuple[str, Fraction, RootSystem]] = []
    for series in ("exceptional", "subexceptional"):
        for entry in load_series(series, data_path).entries:
            if entry.rs.is_simple:
                cases.append((series, entry.m, entry.rs))
    for m, algebra in VOGEL_POINTS["osp"].items():
        if m >= 7:
            cases.append(("osp", m, build_root_system(algebra)))
    for series, m, rs in cases:
        record_id = f"largest-quadric/{series}/m={m}"
        anchor = "β as the dimension of the largest quadric on the adjoint variety"
        beta, gamma = _vogel_parameters(series, m)
        winners = largest_quadric(rs)
        if not winners:
            records.append(CheckRecord(id=record_id, anchor=anchor, status=INFO, left=[str(rs.type)], note="no quadric-type subdiagram"))
            continue
        dim_q = winners[0].dim_q
        ok = dim_q == beta if series != "subexceptional" else dim_q in (beta, gamma)
        records.append(
            CheckRecord(
                id=record_id,
                anchor=anchor,
                status=status_for(ok),
                left=[str(rs.type)],
                right=[str(q.embedding) for q in winners],
                dims={"dim_q": dim_q, "beta": str(beta), "gamma": str(gamma)},
                note=f"{len(winners)} maximal quadrics" if len(winners) > 1 else "",
            )
        )
    return records


def check_normalization(data_path: str | None = None) -> list[CheckRecord]:
    """Ledger: highest-root / Killing Casimir ratio is 2h∨ on every simple subexceptional algebra."""
    records = []
    for entry in load_series("subexceptional", data_path).entries:
        rs = entry.rs
        record_id = _record_id(entry, "normalization")
        anchor = "Casimir normalization of the subexceptional table"
        if not rs.is_simple:
            records.append(CheckRecord(id=record_id, anchor=anchor, status=INFO, note="per-factor Killing normalization"))
            continue
        theta = rs.adjoint_weight()
        ratio = casimir(rs, theta, CasimirNormalization.HIGHEST_ROOT) / casimir(rs, theta, KILLING)
        records.append(
            CheckRecord(
                id=record_id,
                anchor=anchor,
                status=status_for(ratio == 2 * rs.dual_coxeter),
                dims={"ratio": str(ratio), "2h": 2 * rs.dual_coxeter},
            )
        )
    return records


# ----------------------------------------------------------------------
# Two-row multiplicities and the fixed generating functions
# ----------------------------------------------------------------------


def check_mu_lemma(n_max: int = 8) -> list[CheckRecord]:
    start = time.perf_counter()
    checked, mismatches = 0, []
    for n in range(n_max + 1):
        for a in range(n // 2 + 1):
            for b in range(a, n // 2 + 1):
                for c in range(b, n // 2 + 1):
                    checked += 1
                    closed, brute = mu_closed_form(n, a, b, c), mu_bruteforce(n, a, b, c)
                    if closed != brute:
                        mismatches.append(f"n={n} ({a},{b},{c}): closed {closed}, kronecker {brute}")
    return [
        CheckRecord(
            id=f"mu-lemma/n<={n_max}",
            anchor="two-row multiplicities in S^n(A⊗B⊗C)",
            status=status_for(not mismatches),
            right=mismatches[:20],
            dims={"cases": checked, "mismatches": len(mismatches)},
            elapsed_seconds=round(time.perf_counter() - start, 3),
        )
    ]


def _compare_series(record_id: str, anchor: str, expanded: Series, direct: Series, start: float) -> CheckRecord:
    d, note = _series_diff(expanded, direct)
    return CheckRecord(
        id=record_id,
        anchor=anchor,
        status=status_for(d is None),
        dims={"max_degree": len(direct) - 1, "top": direct[-1].total_dim()},
        note=note,
        elapsed_seconds=round(time.perf_counter() - start, 3),
    )


def check_hypermatrix(max_degree: int = 8, budget: int | None = None) -> list[CheckRecord]:
    start = time.perf_counter()
    anchor = "symmetric algebra of 2×2×2 hypermatrices"
    try:
        direct = direct_sym_series(hypermatrix_rs(), (1, 1, 1), max_degree, budget)
    except BudgetExceededError as e:
        return [skipped_record("hypermatrix", anchor, e, start)]
    return [
        _compare_series(f"hypermatrix/{form}", anchor, hypermatrix_series(form, max_degree), direct, start)
        for form in HYPERMATRIX_FORMS
    ]


def check_slso(ns: tuple[int, ...] = (5, 7, 9), max_degree: int = 5, budget: int | None = None) -> list[CheckRecord]:
    """Three rational forms against the Cauchy side; the Cauchy side against a direct plethysm for the smallest n."""
    records = []
    anchor = "symmetric algebra of sl2 × so_n on C² ⊗ Cⁿ"
    for n in ns:
        start = time.perf_counter()
        direct = slso_direct(n, max_degree)
        for form in SLSO_FORMS:
            records.append(_compare_series(f"slso/n={n}/{form}", anchor, expand_gf(slso_gf(n, form), max_degree), direct, start))
    n = min(ns)
    start = time.perf_counter()
    rs = slso_gf(n).rs
    try:
        plethysm = direct_sym_series(rs, (1,) + so_label(1, 0, n), min(max_degree, 4), budget)
    except BudgetExceededError as e:
        records.append(skipped_record(f"slso/n={n}/plethysm", anchor, e, start))
        return records
    records.append(_compare_series(f"slso/n={n}/plethysm", anchor, slso_direct(n, len(plethysm) - 1), plethysm, start))
    return records


def check_sl3(max_degree: int = 8, budget: int | None = None) -> list[CheckRecord]:
    start = time.perf_counter()
    anchor = "symmetric algebra of the adjoint representation of sl3"
    rs = build_root_system("A2")
    try:
        direct = direct_sym_series(rs, (1, 1), max_degree, budget)
    except BudgetExceededError as e:
        return [skipped_record("sl3", anchor, e, start)]
    return [
        _compare_series("sl3/alternatives", anchor, expand_gf(sl3_gf(), max_degree), direct, start),
        _compare_series("sl3/cauchy", anchor, sl3_gf_cauchy(max_degree), direct, start),
    ]


SCORZA_CASES = ((1, 2), (1, 3), (2, 2), (2, 3), (4, 2), (4, 3), (8, 3))


def check_scorza(cases=SCORZA_CASES, max_degree: int = 4, budget: int | None = None) -> list[CheckRecord]:
    records = []
    anchor = "symmetric algebras of the Scorza series"
    for a, n in cases:
        start = time.perf_counter()
        rs, v = scorza_module(a, n)
        dim_ok = weyl_dimension(rs, v) == scorza_dim(a, n)
        try:
            direct = direct_sym_series(rs, v, max_degree, budget)
        except BudgetExceededError as e:
            records.append(skipped_record(f"scorza/a={a},n={n}", anchor, e, start))
            continue
        record = _compare_series(f"scorza/a={a},n={n}", anchor, expand_gf(scorza_gf(a, n), max_degree), direct, start)
        record.dims["dim_v"] = scorza_dim(a, n)
        if not dim_ok:
            record.status = DIFF
            record.note = "; ".join(filter(None, [record.note, f"dim V = {weyl_dimension(rs, v)}"]))
        records.append(record)
    return records


# ----------------------------------------------------------------------
# Induction batteries
# ----------------------------------------------------------------------

INDUCTION_BATTERY: tuple[tuple[str, tuple[int, ...]], ...] = (
    *((("A4", tuple(1 if j == i else 0 for j in range(4))) for i in range(4))),
    *((("D5", tuple(1 if j == i else 0 for j in range(5))) for i in range(5))),
    *((("E6", tuple(1 if j == i else 0 for j in range(6))) for i in (0, 1, 2, 4, 5))),
    ("F4", (1, 0, 0, 0)),
)


def _plethysm_or_skip(rs: RootSystem, lam: Weight, op: PlethysmOp, budget: int | None):
    try:
        return op.apply(rs, lam, budget=budget), None
    except BudgetExceededError as e:
        return None, e


def check_quadric_support(battery=INDUCTION_BATTERY, budget: int | None = None) -> list[CheckRecord]:
    """Every quadric and A-chain trivial transports to a dominant border-supported component of S² or Λ²."""
    records = []
    anchor = "components induced by quadric and A-chain subdiagrams"
    for algebra, lam in battery:
        rs = build_root_system(algebra)
        start = time.perf_counter()
        record_id = f"quadric-support/{algebra}/{rs.format_weight(lam)}"
        square, err = _plethysm_or_skip(rs, lam, PlethysmOp.parse("sym", 2), budget)
        wedge, err2 = _plethysm_or_skip(rs, lam, PlethysmOp.parse("ext", 2), budget)
        if err or err2:
            records.append(skipped_record(record_id, anchor, err or err2, start))
            continue
        found, failures = [], []
        candidates = [(q.embedding, q.tau, square, "S2") for q in quadric_induced(rs, lam)]
        if sorted(c for c in lam if c) == [1]:
            candidates += [(e, tau, square, "S2") for e, tau in achain_induced(rs, lam, "sym")]
            candidates += [(e, tau, wedge, "L2") for e, tau in achain_induced(rs, lam, "ext")]
        for e, tau, target, where in candidates:
            label = f"{where} {e}: {rs.format_weight(tau)}"
            found.append(label)
            zero = sub_root_system(e).zero()
            if target[tau] < 1 or not check_support(e, zero, tau):
                failures.append(label)
        records.append(
            CheckRecord(
                id=record_id,
                anchor=anchor,
                status=status_for(not failures),
                left=found,
                right=failures,
                elapsed_seconds=round(time.perf_counter() - start, 3),
            )
        )
    return records


def check_induction_multiplicities(battery=INDUCTION_BATTERY, budget: int | None = None) -> list[CheckRecord]:
    """
    For a maximal subdiagram D carrying supp λ, the ambient components kλ − ψ with
    ψ supported on D are exactly the transported subalgebra components, with equal
    multiplicities.
    """
    records = []
    anchor = "transport of subdiagram plethysms"
    for algebra, lam in battery:
        rs = build_root_system(algebra)
        for kind in ("sym", "ext"):
            op = PlethysmOp.parse(kind, 2)
            start = time.perf_counter()
            record_id = f"induction/{algebra}/{rs.format_weight(lam)}/{op}"
            ambient, err = _plethysm_or_skip(rs, lam, op, budget)
            if err:
                records.append(skipped_record(record_id, anchor, err, start))
                continue
            failures = []
            subdiagrams = maximal_subdiagrams(rs, lam)
            for e in subdiagrams:
                try:
                    induced = induce_decomposition(e, lam, op, budget=budget)
                except InductionError as exc:
                    failures.append(f"{e}: {exc}")
                    continue
                local = Decomposition(rs, {tau: m for tau, m in ambient.terms.items() if _supported_on(rs, lam, op.degree, tau, e.node_set)})
                if local != induced:
                    failures.append(f"{e}: ambient {local.format()} vs induced {induced.format()}")
            records.append(
                CheckRecord(
                    id=record_id,
                    anchor=anchor,
                    status=status_for(not failures),
                    left=[str(e) for e in subdiagrams],
                    right=failures,
                    elapsed_seconds=round(time.perf_counter() - start, 3),
                )
            )
    return records


def _supported_on(rs: RootSystem, lam: Weight, k: int, tau: Weight, nodes: frozenset[int]) -> bool:
    """kλ − τ is a combination of the simple roots in ``nodes``."""
    psi = tuple(k * c - t for c, t in zip(lam, tau))
    return all(c == 0 or i in nodes for i, c in enumerate(rs.root_coordinates(psi)))


def check_quadric_casimir(data_path: str | None = None) -> list[CheckRecord]:
    """Ledger: which quadric Casimir formula reproduces θ_{V_Q}, per case."""
    cases: list[tuple[RootSystem, Weight]] = []
    for entry in load_series("exceptional", data_path).entries:
        if entry.m >= 0:
            cases.append((entry.rs, entry.rs.adjoint_weight()))
    for algebra in ("B3", "D5", "E6"):
        rs = build_root_system(algebra)
        cases.append((rs, rs.fundamental_weight(0)))
    records = []
    for rs, lam in cases:
        for row in verify_prop22(rs, lam):
            records.append(
                CheckRecord(
                    id=f"quadric-casimir/{row.algebra}/{row.weight}/{row.quadric}",
                    anchor="Casimir of the quadric component of S²V",
                    status=INFO,
                    left=[row.tau],
                    casimirs={"direct": row.direct, "stated": row.stated, "proof": row.proof, "adjoint": row.adjoint or ""},
                    note="matches: " + (", ".join(row.matches) or "none"),
                )
            )
    return records


def _omega_sum(rank: int, *nodes: int) -> Weight:
    out = [0] * rank
    for n in nodes:
        if 1 <= n <= rank:
            out[n - 1] += 1
    return tuple(out)


def centered_square(n: int, k: int) -> tuple[Decomposition, Decomposition]:
    """Predicted S²V_{ω_k}, Λ²V_{ω_k} of sl_n: V_{ω_{k−j}+ω_{k+j}} for j even, respectively odd."""
    rs = build_root_system(f"A{n - 1}")
    square, wedge = {}, {}
    for j in range(min(k, n - k) + 1):
        target = square if j % 2 == 0 else wedge
        mu = _omega_sum(n - 1, k - j, k + j)
        target[mu] = target.get(mu, 0) + 1
    return Decomposition(rs, square), Decomposition(rs, wedge)


def check_centered_square(n_max: int = 8, budget: int | None = None) -> list[CheckRecord]:
    records = []
    anchor = "S² and Λ² of fundamental representations of sl_n"
    for n in range(2, n_max + 1):
        rs = build_root_system(f"A{n - 1}")
        for k in range(1, n):
            lam = _omega_sum(n - 1, k)
            square, wedge = centered_square(n, k)
            for kind, predicted in (("sym", square), ("ext", wedge)):
                start = time.perf_counter()
                record_id = f"centered-square/A{n - 1}/omega{k}/{kind}"
                actual, err = _plethysm_or_skip(rs, lam, PlethysmOp.parse(kind, 2), budget)
                if err:
                    records.append(skipped_record(record_id, anchor, err, start))
                    continue
                records.append(
                    CheckRecord(
                        id=record_id,
                        anchor=anchor,
                        status=status_for(actual == predicted),
                        left=format_terms(actual),
                        right=format_terms(predicted),
                        elapsed_seconds=round(time.perf_counter() - start, 3),
                    )
                )
    # Λ²(Λ⁵C¹⁰): the primitive part splits into two Casimir eigenspaces
    start = time.perf_counter()
    rs = build_root_system("A9")
    record_id = "centered-square/A9/omega5/primitive"
    actual, err = _plethysm_or_skip(rs, _omega_sum(9, 5), PlethysmOp.parse("ext", 2), budget)
    if err:
        records.append(skipped_record(record_id, anchor, err, start))
        return records
    primitive = actual - Decomposition.irreducible(rs, rs.zero())
    eigenvalues = {casimir(rs, mu) for mu in primitive.terms}
    records.append(
        CheckRecord(
            id=record_id,
            anchor=anchor,
            status=status_for(actual == centered_square(10, 5)[1] and len(primitive) == 2 and len(eigenvalues) == 2),
            left=format_terms(primitive),
            casimirs=_casimirs(primitive),
            elapsed_seconds=round(time.perf_counter() - start, 3),
        )
    )
    return records


def check_e7_square(budget: int | None = None) -> list[CheckRecord]:
    """S²V_{ω₇} of E₇ is V_{2ω₇} ⊕ V_{ω₁}: the adjoint sits in the square of the 56."""
    start = time.perf_counter()
    anchor = "adjoint of E7 in the square of the minuscule representation"
    rs = build_root_system("E7")
    actual, err = _plethysm_or_skip(rs, _omega_sum(7, 7), PlethysmOp.parse("sym", 2), budget)
    if err:
        return [skipped_record("e7-square", anchor, err, start)]
    predicted = Decomposition(rs, {_omega_sum(7, 7, 7): 1, _omega_sum(7, 1): 1})
    return [
        CheckRecord(
            id="e7-square",
            anchor=anchor,
            status=status_for(actual == predicted),
            left=format_terms(actual),
            right=format_terms(predicted),
            elapsed_seconds=round(time.perf_counter() - start, 3),
        )
    ]


def check_severi_aad(data_path: str | None = None) -> list[CheckRecord]:
    """g = (VV*)_Aad: every weight of g is the Aad weight of some chain from supp V to supp V*."""
    records = []
    for entry in load_series("severi", data_path).entries:
        rs = entry.rs
        v = entry.role("V")
        if len(v) != 1:
            records.append(CheckRecord(id=_record_id(entry, "aad-g"), anchor="g = (VV*)_Aad", status=INFO, note="V is reducible"))
            continue
        lam = next(iter(v.terms))
        found = {tau for _, tau, ok in aad_chains(rs, lam, rs.dual(lam)) if ok}
        g = entry.role("g")
        records.append(
            CheckRecord(
                id=_record_id(entry, "aad-g"),
                anchor="g = (VV*)_Aad",
                status=status_for(bool(g) and set(g.terms) <= found),
                left=sorted(rs.format_weight(t) for t in found),
                right=format_terms(g),
            )
        )
    return records


# ----------------------------------------------------------------------
# Registry
# ----------------------------------------------------------------------

BATTERIES: dict[str, Callable[..., list[CheckRecord]]] = {
    "vogel-dim": lambda **kw: check_vogel_dimensions(),
    "magic-square": lambda **kw: check_magic_square(),
    "vogel-casimir": lambda **kw: check_vogel_casimirs(kw.get("data_path")),
    "largest-quadric": lambda **kw: check_largest_quadric(kw.get("data_path")),
    "normalization": lambda **kw: check_normalization(kw.get("data_path")),
    "mu-lemma": lambda **kw: check_mu_lemma(kw.get("n_max") or 8),
    "hypermatrix": lambda **kw: check_hypermatrix(budget=kw.get("budget")),
    "slso": lambda **kw: check_slso(budget=kw.get("budget")),
    "sl3": lambda **kw: check_sl3(budget=kw.get("budget")),
    "scorza": lambda **kw: check_scorza(budget=kw.get("budget")),
    "quadric-support": lambda **kw: check_quadric_support(budget=kw.get("budget")),
    "induction": lambda **kw: check_induction_multiplicities(budget=kw.get("budget")),
    "quadric-casimir": lambda **kw: check_quadric_casimir(kw.get("data_path")),
    "centered-square": lambda **kw: check_centered_square(budget=kw.get("budget")),
    "e7-square": lambda **kw: check_e7_square(kw.get("budget")),
    "severi-aad": lambda **kw: check_severi_aad(kw.get("data_path")),
}
