"""
Command-line entry point for the series engine.

    python -m app decompose F4 0,0,0,1 --ext 2
    python -m app verify --identity vogel-dim --all-rows
    python -m app induce E6 omega1 omega6 --aad full-chain
    python -m app info E8

Results go to stdout (a table, or JSON lines with ``--format records``);
logging goes to stderr. Exit status: 0 clean, 1 a diff was found, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

import structlog
from pydantic import BaseModel

from app.config import override_settings
from app.errors import InvalidAlgebraError, SeriesDataError, SeriesEngineError, WeightError
from app.induction.induced import PlethysmOp, aad_chains, aad_induced, achain_induced, quadric_induced
from app.lie.chars import CasimirNormalization, Decomposition, casimir, tensor, weyl_dimension
from app.lie.rootsys import RootSystem, Weight, build_root_system
from app.logging_config import bind_run_context, setup_logging
from app.schemas.report import CheckStatus, DecompositionRow, InducedRow, Report
from app.tasks.verify import Selection, run_verification

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_USAGE = 2

USAGE_ERRORS = (InvalidAlgebraError, WeightError, SeriesDataError)


# ----------------------------------------------------------------------
# Output
# ----------------------------------------------------------------------


def _emit_records(rows: Sequence[BaseModel], out: TextIO) -> None:
    for row in rows:
        out.write(row.model_dump_json() + "\n")


def _write_report_file(path: Path, rows: Sequence[BaseModel]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        _emit_records(rows, fh)
    logger.info("report_written", path=str(path), records=len(rows))


def _table(headers: list[str], rows: list[list[str]], out: TextIO) -> None:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    out.write("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _finish(args: argparse.Namespace, rows: Sequence[BaseModel], title: str, table: tuple[list[str], list[list[str]]]) -> None:
    if args.output:
        _write_report_file(Path(args.output), rows)
    if args.format == "records":
        _emit_records(rows, sys.stdout)
        return
    sys.stdout.write(title + "\n")
    _table(*table, out=sys.stdout)


# ----------------------------------------------------------------------
# decompose
# ----------------------------------------------------------------------


def _second_factor(rs: RootSystem, values: list[str]) -> Weight:
    """``--tensor WEIGHT`` or ``--tensor ALGEBRA WEIGHT``; the algebra must match."""
    if len(values) == 2:
        other = build_root_system(values[0])
        if other.type != rs.type:
            raise WeightError(f"cannot tensor a {rs.type} module with a {other.type} module")
        return rs.parse_weight(values[1])
    if len(values) == 1:
        return rs.parse_weight(values[0])
    raise WeightError("--tensor takes WEIGHT or ALGEBRA WEIGHT")


def _decompose(args: argparse.Namespace, rs: RootSystem, lam: Weight) -> tuple[str, Decomposition]:
    budget = args.budget
    name = f"{rs.type} {rs.format_weight(lam)}"
    if args.tensor:
        mu = _second_factor(rs, args.tensor)
        return f"{name} ⊗ {rs.format_weight(mu)}", tensor(rs, lam, mu, limit=budget)
    for kind in ("sym", "ext", "schur"):
        arg = getattr(args, kind)
        if arg is not None:
            op = PlethysmOp.parse(kind, arg)
            return f"{op} {name}", op.apply(rs, lam, budget=budget)
    return name, Decomposition.irreducible(rs, lam)


def cmd_decompose(args: argparse.Namespace) -> int:
    rs = build_root_system(args.algebra)
    lam = rs.require_dominant(rs.parse_weight(args.weight))
    title, decomposition = _decompose(args, rs, lam)
    rows = [
        DecompositionRow(
            algebra=str(rs.type),
            weight=rs.format_weight(mu),
            multiplicity=m,
            dim=d,
            casimir_highest_root=str(casimir(rs, mu, CasimirNormalization.HIGHEST_ROOT)),
            casimir_killing=str(casimir(rs, mu, CasimirNormalization.KILLING)),
        )
        for mu, m, d in decomposition.dims()
    ]
    logger.info("decomposed", what=title, terms=len(rows), dim=decomposition.total_dim())
    _finish(
        args,
        rows,
        f"{title} = {decomposition.format()}  (dim {decomposition.total_dim()})",
        (
            ["mult", "weight", "dim", "C(highest-root)", "C(killing)"],
            [[str(r.multiplicity), r.weight, str(r.dim), r.casimir_highest_root, r.casimir_killing] for r in rows],
        ),
    )
    return EXIT_OK


# ----------------------------------------------------------------------
# induce
# ----------------------------------------------------------------------


def _quadric_rows(rs: RootSystem, lam: Weight, budget: int | None) -> list[InducedRow]:
    square = PlethysmOp.parse("sym", 2).apply(rs, lam, budget=budget)
    return [
        InducedRow(
            algebra=str(rs.type),
            weight=rs.format_weight(lam),
            method="quadric",
            subdiagram=str(q.embedding),
            induced=rs.format_weight(q.tau),
            dim=weyl_dimension(rs, q.tau),
            verified=q.tau in square,
            note=f"{q.label}, dim Q = {q.dim_q}",
        )
        for q in quadric_induced(rs, lam)
    ]


def _achain_rows(rs: RootSystem, lam: Weight, which: str, budget: int | None) -> list[InducedRow]:
    rows = []
    for op in (("sym", "ext") if which == "both" else (which,)):
        square = PlethysmOp.parse(op, 2).apply(rs, lam, budget=budget)
        for e, tau in achain_induced(rs, lam, op):
            rows.append(
                InducedRow(
                    algebra=str(rs.type),
                    weight=rs.format_weight(lam),
                    method=f"achain-{op}",
                    subdiagram=str(e),
                    induced=rs.format_weight(tau),
                    dim=weyl_dimension(rs, tau),
                    verified=tau in square,
                    note=str(PlethysmOp.parse(op, 2)),
                )
            )
    return rows


def _parse_chain(rs: RootSystem, text: str) -> tuple[int, ...]:
    try:
        nodes = tuple(int(x) - 1 for x in text.split(",") if x)
    except ValueError as e:
        raise WeightError(f"cannot parse chain {text!r}; give 1-based nodes like 1,3,4") from e
    if not nodes:
        raise WeightError("--aad needs at least one node")
    bad = [n + 1 for n in nodes if not 0 <= n < rs.rank]
    if bad:
        raise WeightError(f"chain nodes {bad} outside 1..{rs.rank} for {rs.type}")
    return nodes


def _aad_rows(rs: RootSystem, lam: Weight, mu: Weight, chain: str, budget: int | None) -> list[InducedRow]:
    if chain == "full-chain":
        found = aad_chains(rs, lam, mu)
    else:
        nodes = _parse_chain(rs, chain)
        found = [(nodes, aad_induced(rs, lam, mu, nodes), True)]
    product = tensor(rs, lam, mu, limit=budget)
    rows = []
    for nodes, tau, dominant in found:
        rows.append(
            InducedRow(
                algebra=str(rs.type),
                weight=f"{rs.format_weight(lam)} ⊗ {rs.format_weight(mu)}",
                method="aad",
                subdiagram=str([n + 1 for n in nodes]),
                induced=rs.format_weight(tau),
                dim=weyl_dimension(rs, tau) if dominant else None,
                verified=dominant and tau in product,
                note="" if dominant else "not dominant",
            )
        )
    return rows


def cmd_induce(args: argparse.Namespace) -> int:
    rs = build_root_system(args.algebra)
    lam = rs.require_dominant(rs.parse_weight(args.weight))
    if args.aad:
        if not args.second:
            raise WeightError("--aad needs a second weight")
        mu = rs.require_dominant(rs.parse_weight(args.second))
        rows = _aad_rows(rs, lam, mu, args.aad, args.budget)
    elif args.second:
        raise WeightError("a second weight is only used with --aad")
    elif args.achain:
        rows = _achain_rows(rs, lam, args.achain, args.budget)
    else:
        rows = _quadric_rows(rs, lam, args.budget)
    _finish(
        args,
        rows,
        f"{rs.type} {rs.format_weight(lam)}: {len(rows)} induced weight(s)",
        (
            ["method", "subdiagram", "induced", "dim", "verified", "note"],
            [[r.method, r.subdiagram, r.induced, str(r.dim or "-"), str(r.verified), r.note] for r in rows],
        ),
    )
    return EXIT_OK if all(r.verified for r in rows if r.dim is not None) else EXIT_DIFF


# ----------------------------------------------------------------------
# info
# ----------------------------------------------------------------------


class AlgebraInfo(BaseModel):
    algebra: str
    rank: int
    positive_roots: int
    dual_coxeter: list[int]
    weyl_group_order: int
    fundamental_dims: list[int]


def cmd_info(args: argparse.Namespace) -> int:
    rs = build_root_system(args.algebra)
    info = AlgebraInfo(
        algebra=str(rs.type),
        rank=rs.rank,
        positive_roots=len(rs.positive_roots),
        dual_coxeter=list(rs.dual_coxeters),
        weyl_group_order=rs.weyl_group_order,
        fundamental_dims=[weyl_dimension(rs, rs.fundamental_weight(i)) for i in range(rs.rank)],
    )
    _finish(
        args,
        [info],
        str(rs.type),
        (
            ["rank", "|Δ+|", "h∨", "|W|", "fundamental dims"],
            [
                [
                    str(info.rank),
                    str(info.positive_roots),
                    ",".join(map(str, info.dual_coxeter)),
                    str(info.weyl_group_order),
                    ",".join(map(str, info.fundamental_dims)),
                ]
            ],
        ),
    )
    return EXIT_OK


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def _print_report(report: Report, out: TextIO) -> None:
    rows = [[r.status.value, r.id, r.anchor, r.note] for r in report.records]
    _table(["status", "id", "anchor", "note"], rows, out)
    summary = ", ".join(f"{k} {v}" for k, v in report.summary().items() if v)
    out.write(f"{len(report.records)} records: {summary or 'none'}\n")


def cmd_verify(args: argparse.Namespace) -> int:
    if args.all_identities and args.identity:
        raise SeriesDataError("--all-identities and --identity are exclusive")
    if args.all_rows and args.m:
        raise SeriesDataError("--all-rows and --m are exclusive")
    selection = Selection(
        series=args.series or [],
        m=args.m or [],
        identities=args.identity or [],
        everything=args.all,
    )
    report = run_verification(selection, budget=args.budget, data_path=args.data, n_max=args.n_max, n_jobs=args.jobs)
    if args.output:
        _write_report_file(Path(args.output), report.records)
    if args.format == "records":
        _emit_records(report.records, sys.stdout)
    else:
        _print_report(report, sys.stdout)
    if report.has_diff:
        failed = [r.id for r in report.records if r.status is CheckStatus.DIFF]
        logger.warning("verification_diff", failed=failed[:20], count=len(failed))
        return EXIT_DIFF
    return EXIT_OK


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--norm", choices=[n.value for n in CasimirNormalization], help="Casimir normalization")
    common.add_argument("--budget", type=int, help="largest character mass a computation may build")
    common.add_argument("--format", choices=["table", "records"], default="table")
    common.add_argument("--data", help="directory of series tables")
    common.add_argument("--jobs", type=int, help="worker processes for verify")
    common.add_argument("--output", help="also write the records as JSON lines to this file")
    common.add_argument("--log-level", help="root log level (default from settings)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="series-engine", description="Exact decompositions along the Freudenthal series")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="decompose a tensor, symmetric, exterior or Schur power")
    p.add_argument("algebra")
    p.add_argument("weight", help="1,0,0 or omega3 or adjoint")
    power = p.add_mutually_exclusive_group()
    power.add_argument("--tensor", nargs="+", metavar="ARG", help="WEIGHT or ALGEBRA WEIGHT")
    power.add_argument("--sym", type=int, metavar="K")
    power.add_argument("--ext", type=int, metavar="K")
    power.add_argument("--schur", metavar="PARTITION")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="check series tables, identities and batteries")
    p.add_argument("--series", action="append")
    p.add_argument("--m", action="append", help="row parameter, e.g. 1, -2/3 (repeatable)")
    p.add_argument("--identity", action="append", help="identity, generating function or battery id (repeatable)")
    p.add_argument("--all-identities", action="store_true", help="every identity of the selected rows (default)")
    p.add_argument("--all-rows", action="store_true", help="every tabled m (default)")
    p.add_argument("--n-max", type=int, help="upper bound for the n-indexed batteries")
    p.add_argument("--all", action="store_true", help="every table and battery")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("induce", parents=[common], help="weights induced from marked subdiagrams")
    p.add_argument("algebra")
    p.add_argument("weight")
    p.add_argument("second", nargs="?", help="second weight for --aad")
    how = p.add_mutually_exclusive_group()
    how.add_argument("--quadric", action="store_true", help="quadric subdiagrams in S² (default)")
    how.add_argument("--achain", nargs="?", const="both", choices=["sym", "ext", "both"])
    how.add_argument("--aad", metavar="CHAIN", help="full-chain or 1-based nodes like 1,3,4,5,6")
    p.set_defaults(handler=cmd_induce)

    p = sub.add_parser("info", parents=[common], help="root system summary")
    p.add_argument("algebra")
    p.set_defaults(handler=cmd_info)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = override_settings(
        casimir_norm=args.norm,
        max_character_mass=args.budget,
        data_path=args.data,
        jobs=args.jobs,
        log_level=args.log_level,
    )
    setup_logging(settings.log_level, settings.log_format, stream=sys.stderr)
    bind_run_context(args.command)
    try:
        return args.handler(args)
    except USAGE_ERRORS as e:
        sys.stderr.write(f"{parser.prog} {args.command}: {e}\n")
        return EXIT_USAGE
    except SeriesEngineError as e:
        logger.error("command_failed", command=args.command, error=str(e))
        sys.stderr.write(f"{parser.prog} {args.command}: {type(e).__name__}: {e}\n")
        return EXIT_DIFF


if __name__ == "__main__":
    sys.exit(main())
