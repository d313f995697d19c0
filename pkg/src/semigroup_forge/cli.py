"""Command-line surface: info, check, witness, sweep, count, extremal.

Exit codes: 0 success, 1 usage or validation failure, 2 mathematical-claim
violation (a failed bound or witness), 3 overflow or enumeration budget.
Machine formats are JSON-lines (one record per line, stable key order,
compact separators) and CSV with the fixed header
``bound_id,lhs,rhs,slack,holds,gens``; neither carries wall-clock timing,
so sweep files are byte-identical for any worker count.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import IO, Iterable

from . import apery as apery_mod
from . import bounds as bounds_mod
from . import enumeration as enum_mod
from .core import from_generators
from .errors import (
    AnchorNotInSemigroup,
    AnchorZero,
    BudgetExceeded,
    DegenerateFullMonoid,
    EmptyInput,
    NonCoprime,
    NotAlmostSymmetric,
    Overflow,
    UnitGenerator,
    WitnessViolation,
)

SCHEMA_VERSION = "1"
CSV_HEADER = ("bound_id", "lhs", "rhs", "slack", "holds", "gens")

_CLASS_NAMES = {
    apery_mod.SymmetryClass.SYMMETRIC: "Symmetric",
    apery_mod.SymmetryClass.PSEUDO_SYMMETRIC: "PseudoSymmetric",
    apery_mod.SymmetryClass.ALMOST_SYMMETRIC_OTHER: "AlmostSymmetricOther",
    apery_mod.SymmetryClass.NONE: "None",
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except (
        EmptyInput,
        UnitGenerator,
        NonCoprime,
        AnchorZero,
        AnchorNotInSemigroup,
        DegenerateFullMonoid,
        NotAlmostSymmetric,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except WitnessViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 2
    except (Overflow, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; argparse defaults to 2
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="semigroup-forge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="invariants of one semigroup")
    p_info.add_argument("gens", help="comma-separated generators, e.g. 3,5,7")
    _add_output_args(p_info, formats=("text", "json"))
    p_info.set_defaults(func=cmd_info)

    p_check = sub.add_parser("check", help="evaluate inequality bounds")
    p_check.add_argument("gens")
    p_check.add_argument("--bounds", default="all", help="comma list or 'all'")
    _add_output_args(p_check, formats=("text", "json", "csv"))
    p_check.set_defaults(func=cmd_check)

    p_wit = sub.add_parser("witness", help="dump a partition witness")
    p_wit.add_argument("gens")
    p_wit.add_argument("--kind", choices=("apery", "pf"), required=True)
    _add_output_args(p_wit, formats=("text", "json"))
    p_wit.set_defaults(func=cmd_witness)

    p_sweep = sub.add_parser("sweep", help="exhaustive checks up to a genus")
    _add_sweep_args(p_sweep)
    p_sweep.add_argument("--witnesses", action="store_true", help="also build both witnesses")
    p_sweep.add_argument(
        "--oracle-crosscheck",
        action="store_true",
        help="compare the tree against the brute-force gap-set oracle",
    )
    _add_output_args(p_sweep, formats=("text", "json", "csv"))
    p_sweep.set_defaults(func=cmd_sweep)

    p_count = sub.add_parser("count", help="per-genus counts only")
    p_count.add_argument("--max-genus", type=int, required=True)
    p_count.add_argument("--force", action="store_true", help="override the genus cap")
    _add_output_args(p_count, formats=("text", "json"))
    p_count.set_defaults(func=cmd_count)

    p_ext = sub.add_parser("extremal", help="minimum-slack attainers per bound")
    _add_sweep_args(p_ext)
    _add_output_args(p_ext, formats=("text", "json", "csv"))
    p_ext.set_defaults(func=cmd_extremal)

    return parser


def _add_sweep_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--bounds", default="all", help="comma list or 'all'")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--split-depth", type=int, default=enum_mod.DEFAULT_SPLIT_DEPTH)
    p.add_argument("--force", action="store_true", help="override the genus cap")


def _add_output_args(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--out", default=None, help="write to this file instead of stdout")


def cmd_info(args: argparse.Namespace) -> int:
    s = from_generators(_parse_gens(args.gens))
    pf = apery_mod.pseudo_frobenius(s)
    cls = apery_mod.symmetry_class(s)
    ap = tuple(sorted(s.apery_mult))
    payload = {
        "gens": list(s.min_gens),
        "multiplicity": s.multiplicity,
        "embedding_dim": s.embedding_dim,
        "frobenius": s.frobenius,
        "genus": s.genus,
        "small_count": s.small_count,
        "q": s.q,
        "type": pf.type_t,
        "pf": list(pf.elements),
        "apery": list(ap),
        "symmetry_class": cls.value,
    }
    with _output(args.out) as fh:
        if args.format == "json":
            _write_json(fh, "info", [payload])
        else:
            fh.write(
                f"gens={_gens_text(s.min_gens)} g1={s.multiplicity} e={s.embedding_dim} "
                f"F={s.frobenius} genus={s.genus} n={s.small_count} q={s.q} t={pf.type_t} "
                f"PF={_set_text(pf.elements)} Ap={_set_text(ap)} class={_CLASS_NAMES[cls]}\n"
            )
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    selected = _parse_bounds(args.bounds)
    s = from_generators(_parse_gens(args.gens))
    reports = [bounds_mod.check_bound(s, b) for b in selected]
    with _output(args.out) as fh:
        if args.format == "json":
            _write_json(fh, "check", [_report_payload(r) for r in reports])
        elif args.format == "csv":
            _write_csv(fh, reports)
        else:
            fh.write(f"{'bound':<14}{'lhs':>12}{'rhs':>12}{'slack':>8}  {'holds':<6}{'scope'}\n")
            for r in reports:
                fh.write(
                    f"{r.bound_id.value:<14}{r.lhs:>12}{r.rhs:>12}{r.slack:>8}  "
                    f"{'yes' if r.holds else 'NO':<6}{r.scope.value}\n"
                )
    return 0 if all(r.holds for r in reports) else 2


def cmd_witness(args: argparse.Namespace) -> int:
    s = from_generators(_parse_gens(args.gens))
    if args.kind == "apery":
        part = bounds_mod.apery_partition_witness(s)
    else:
        part = bounds_mod.pf_partition_witness(s)
    payload = {
        "kind": part.kind.value,
        "gens": list(part.gens),
        "excluded": list(part.excluded),
        "blocks": [
            {"source": src, "pairs": [[a, b] for a, b in pairs]} for src, pairs in part.blocks
        ],
        "ledger": {
            "lower": part.ledger_lower,
            "total": part.ledger_total,
            "upper": part.ledger_upper,
        },
        "forbidden_pairs_checked": part.forbidden_pairs_checked,
    }
    with _output(args.out) as fh:
        if args.format == "json":
            _write_json(fh, "witness", [payload])
        else:
            fh.write(f"kind={part.kind.value} gens={_gens_text(part.gens)}\n")
            fh.write(f"excluded: {_set_text(part.excluded)}\n")
            for src, pairs in part.blocks:
                body = ", ".join(f"({a},{b})" for a, b in pairs)
                fh.write(f"{src} → [{body}]\n")
            fh.write(
                f"ledger: {part.ledger_lower} ≤ {part.ledger_total} ≤ {part.ledger_upper}\n"
            )
            fh.write(f"forbidden pairs checked: {part.forbidden_pairs_checked}\n")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    usage = _cap_usage_error(args.max_genus, args.force)
    if usage:
        print(f"error: {usage}", file=sys.stderr)
        return 1
    selected = _parse_bounds(args.bounds)
    summary = enum_mod.sweep(
        args.max_genus,
        bounds=selected,
        witnesses=args.witnesses,
        workers=args.workers,
        oracle_crosscheck=args.oracle_crosscheck,
        split_depth=args.split_depth,
        force=args.force,
    )
    with _output(args.out) as fh:
        if args.format == "json":
            _write_json(fh, "sweep", [_summary_payload(summary, selected, args.witnesses)])
        elif args.format == "csv":
            _write_csv(fh, _extremal_reports(summary))
        else:
            _write_summary_text(fh, summary)
    print(f"sweep finished in {summary.wall_time:.2f}s", file=sys.stderr)
    return 0 if not summary.violations else 2


def cmd_count(args: argparse.Namespace) -> int:
    usage = _cap_usage_error(args.max_genus, args.force)
    if usage:
        print(f"error: {usage}", file=sys.stderr)
        return 1
    summary = enum_mod.enumerate_tree(args.max_genus, force=args.force)
    payload = {
        "max_genus": summary.max_genus,
        "counts": list(summary.counts),
        "total": summary.total,
    }
    with _output(args.out) as fh:
        if args.format == "json":
            _write_json(fh, "count", [payload])
        else:
            fh.write(f"counts: {_set_text(summary.counts, brackets='[]')}\n")
            fh.write(f"total: {summary.total}\n")
    print(f"count finished in {summary.wall_time:.2f}s", file=sys.stderr)
    return 0


def cmd_extremal(args: argparse.Namespace) -> int:
    usage = _cap_usage_error(args.max_genus, args.force)
    if usage:
        print(f"error: {usage}", file=sys.stderr)
        return 1
    selected = _parse_bounds(args.bounds)
    summary = enum_mod.sweep(
        args.max_genus,
        bounds=selected,
        workers=args.workers,
        split_depth=args.split_depth,
        force=args.force,
    )
    with _output(args.out) as fh:
        if args.format == "json":
            _write_json(fh, "extremal", [_extremum_payload(x) for x in summary.extremal])
        elif args.format == "csv":
            _write_csv(fh, _extremal_reports(summary))
        else:
            for x in summary.extremal:
                fh.write(f"{x.bound_id.value} min_slack={x.min_slack}\n")
                for gens in x.attainers:
                    fh.write(f"  {_gens_text(gens)}\n")
            if summary.violations:
                fh.write(f"violations: {len(summary.violations)}\n")
    print(f"extremal finished in {summary.wall_time:.2f}s", file=sys.stderr)
    return 0 if not summary.violations else 2


def _parse_gens(text: str) -> tuple[int, ...]:
    cleaned = text.strip().strip("<>⟨⟩")
    if not cleaned.strip():
        raise EmptyInput("no generators supplied")
    values = []
    for token in cleaned.split(","):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise ValueError(f"invalid generator token {token!r}") from None
    return tuple(values)


def _parse_bounds(text: str) -> tuple[bounds_mod.BoundId, ...]:
    if text.strip().lower() == "all":
        return tuple(bounds_mod.BoundId)
    by_token = {b.value: b for b in bounds_mod.BoundId}
    chosen = set()
    for token in text.split(","):
        token = token.strip().lower()
        if token not in by_token:
            raise ValueError(
                f"unknown bound {token!r} (choose from {', '.join(by_token)} or 'all')"
            )
        chosen.add(by_token[token])
    return tuple(b for b in bounds_mod.BoundId if b in chosen)


def _cap_usage_error(max_genus: int, force: bool) -> str | None:
    if max_genus < 0:
        return "max-genus must be non-negative"
    cap = enum_mod.genus_cap()
    if max_genus > cap and not force:
        return f"max-genus {max_genus} exceeds cap {cap} (use --force)"
    return None


class _output:
    """Context manager yielding stdout or an opened UTF-8 file."""

    def __init__(self, path: str | None) -> None:
        self.path = path
        self.fh: IO[str] | None = None

    def __enter__(self) -> IO[str]:
        if self.path is None:
            return sys.stdout
        self.fh = open(self.path, "w", encoding="utf-8", newline="")
        return self.fh

    def __exit__(self, *exc: object) -> None:
        if self.fh is not None:
            self.fh.close()


def _write_json(fh: IO[str], command: str, payloads: Iterable[dict]) -> None:
    for payload in payloads:
        record = {"schema_version": SCHEMA_VERSION, "command": command, "payload": payload}
        fh.write(json.dumps(record, separators=(",", ":"), ensure_ascii=False) + "\n")


def _write_csv(fh: IO[str], reports: Iterable[bounds_mod.BoundReport]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow(
            [
                r.bound_id.value,
                r.lhs,
                r.rhs,
                r.slack,
                "true" if r.holds else "false",
                ",".join(str(g) for g in r.gens),
            ]
        )


def _report_payload(r: bounds_mod.BoundReport) -> dict:
    return {
        "bound_id": r.bound_id.value,
        "lhs": r.lhs,
        "rhs": r.rhs,
        "slack": r.slack,
        "holds": r.holds,
        "scope": r.scope.value,
        "gens": list(r.gens),
    }


def _extremum_payload(x: enum_mod.SlackExtremum) -> dict:
    return {
        "bound_id": x.bound_id.value,
        "min_slack": x.min_slack,
        "example": list(x.example),
        "attainers": [list(g) for g in x.attainers],
    }


def _summary_payload(
    summary: enum_mod.SweepSummary,
    selected: tuple[bounds_mod.BoundId, ...],
    witnesses: bool,
) -> dict:
    return {
        "max_genus": summary.max_genus,
        "bounds": [b.value for b in selected],
        "witnesses": witnesses,
        "counts": list(summary.counts),
        "total": summary.total,
        "almost_symmetric_count": summary.almost_symmetric_count,
        "witnesses_checked": summary.witnesses_checked,
        "extremal": [_extremum_payload(x) for x in summary.extremal],
        "violations": [
            {
                "category": v.category,
                "bound_id": v.bound_id.value if v.bound_id else None,
                "gens": list(v.gens),
                "message": v.message,
            }
            for v in summary.violations
        ],
        "identity_only": [list(g) for g in summary.identity_only],
        "oracle_match": summary.oracle_match,
    }


def _extremal_reports(summary: enum_mod.SweepSummary) -> list[bounds_mod.BoundReport]:
    reports = []
    for x in summary.extremal:
        reports.append(bounds_mod.check_bound(from_generators(x.example), x.bound_id))
    return reports


def _write_summary_text(fh: IO[str], summary: enum_mod.SweepSummary) -> None:
    fh.write(f"max_genus: {summary.max_genus}\n")
    fh.write(f"counts: {_set_text(summary.counts, brackets='[]')}\n")
    fh.write(f"total: {summary.total}\n")
    fh.write(f"almost_symmetric: {summary.almost_symmetric_count}\n")
    fh.write(f"witnesses_checked: {summary.witnesses_checked}\n")
    if summary.extremal:
        fh.write("extremal:\n")
        for x in summary.extremal:
            fh.write(
                f"  {x.bound_id.value:<14}min_slack={x.min_slack} "
                f"example={_gens_text(x.example)} attainers={len(x.attainers)}\n"
            )
    if summary.violations:
        fh.write(f"violations: {len(summary.violations)}\n")
        for v in summary.violations:
            bound = f" {v.bound_id.value}" if v.bound_id else ""
            fh.write(f"  [{v.category}{bound}] {_gens_text(v.gens)}: {v.message}\n")
    else:
        fh.write("violations: none\n")
    if summary.identity_only:
        fh.write("identity_without_definition:\n")
        for gens in summary.identity_only:
            fh.write(f"  {_gens_text(gens)}\n")
    if summary.oracle_match is not None:
        fh.write(f"oracle_crosscheck: {'ok' if summary.oracle_match else 'MISMATCH'}\n")


def _gens_text(gens: tuple[int, ...]) -> str:
    return "⟨" + ",".join(str(g) for g in gens) + "⟩"


def _set_text(values: Iterable[int], brackets: str = "{}") -> str:
    return brackets[0] + ",".join(str(v) for v in values) + brackets[1]
