"""Command-line entry point: ``lagrangemin {root,expand,table,audit,specfun}``.

Exit status is 0 on success, 2 on usage errors and 3 on domain errors.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import gammamin
from .specfun import (
    DomainError,
    MIN_DIGITS,
    PrecisionConfig,
    digamma,
    format_fixed,
    format_sig,
    hurwitz_zeta,
    polygamma,
    riemann_zeta,
)

TABLE_SIG = 10
DELTA_DECIMALS = 9
MAX_ORDER = 20


class UsageError(Exception):
    pass


def _digits(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid digit count: {text!r}")
    if d < MIN_DIGITS:
        raise argparse.ArgumentTypeError(f"digits must be ≥ {MIN_DIGITS}")
    return d


def _real(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a decimal or p/q number: {text!r}")


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}")


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _text_table(header, rows) -> str:
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


# -- commands -----------------------------------------------------------------


def cmd_root(args) -> str:
    cfg = PrecisionConfig(args.digits)
    return format_sig(gammamin.psi_root(cfg), args.digits) + "\n"


def _expansion_rows(res: gammamin.ExpansionResult, digits: int) -> list[list[str]]:
    return [
        [res.method, str(n), format_sig(c, digits), format_sig(t, digits), format_sig(s, digits)]
        for n, (c, t, s) in enumerate(zip(res.coefficients, res.terms, res.partial_sums), 1)
    ]


def _max_rel_deviation(a: gammamin.ExpansionResult, b: gammamin.ExpansionResult):
    worst = 0
    for x, y in zip(a.h, b.h):
        scale = max(abs(x), abs(y))
        if scale:
            dev = abs(x - y) / scale
            worst = dev if worst == 0 or dev > worst else worst
    return worst


def cmd_expand(args) -> str:
    if not 1 <= args.order <= MAX_ORDER:
        raise UsageError(f"order must lie in 1..{MAX_ORDER}")
    cfg = PrecisionConfig(args.digits)
    methods = gammamin.METHODS if args.method == "both" else (args.method,)
    results = [gammamin.expand(args.a, args.order, m, cfg) for m in methods]
    deviation = _max_rel_deviation(*results) if len(results) == 2 else None
    d = args.digits
    header = ["method", "n", "coefficient", "term", "partial_sum"]
    rows = [row for res in results for row in _expansion_rows(res, d)]

    if args.format == "csv":
        out = [header] + rows
        if deviation is not None:
            out.append(["max_relative_deviation", "", "", "", format_sig(deviation, 3)])
        return _csv(out)
    if args.format == "json":
        payload = {
            "anchor": format_sig(results[0].anchor, d),
            "offset": format_sig(results[0].offset, d),
            "digits": d,
            "results": [
                {
                    "anchor": format_sig(r.anchor, d),
                    "method": r.method,
                    "offset": format_sig(r.offset, d),
                    "h": [format_sig(x, d) for x in r.h],
                    "coefficients": [format_sig(x, d) for x in r.coefficients],
                    "terms": [format_sig(x, d) for x in r.terms],
                    "partial_sums": [format_sig(x, d) for x in r.partial_sums],
                }
                for r in results
            ],
        }
        if deviation is not None:
            payload["max_relative_deviation"] = format_sig(deviation, 3)
        return _json(payload)
    text = (
        f"anchor a = {format_sig(results[0].anchor, d)}\n"
        f"offset -psi(a) = {format_sig(results[0].offset, d)}\n\n"
    )
    text += _text_table(header, rows)
    if deviation is not None:
        text += f"\nmax relative deviation between engines: {format_sig(deviation, 3)}\n"
    return text


def _table_rows(report: gammamin.TableReport) -> list[list[str]]:
    return [
        [
            row.label,
            format_sig(row.computed, TABLE_SIG),
            format_sig(row.paper_value, TABLE_SIG),
            format_fixed(row.delta, DELTA_DECIMALS),
        ]
        for row in report.rows
    ]


def cmd_table(args) -> str:
    report = gammamin.table(args.id, PrecisionConfig(args.digits))
    header = ["row_label", "computed", "paper_value", "delta"]
    rows = _table_rows(report)
    if args.format == "csv":
        return _csv([header] + rows)
    if args.format == "json":
        return _json(
            {
                "table_id": report.table_id,
                "rows": [dict(zip(("label", "computed", "paper_value", "delta"), r)) for r in rows],
                "method_note": report.method_note,
            }
        )
    return f"Table {report.table_id}\n\n" + _text_table(header, rows) + "\n" + report.method_note + "\n"


def cmd_audit(args) -> str:
    d = args.digits
    report = gammamin.discrepancy_report(PrecisionConfig(d))
    header = ["anchor", "order", "lhs_name", "lhs", "rhs_name", "rhs", "delta"]
    rows = [
        [r.anchor, str(r.order), r.lhs_name, format_sig(r.lhs, d), r.rhs_name, format_sig(r.rhs, d), format_sig(r.delta, 6)]
        for r in report["records"]
    ]
    if args.format == "csv":
        return _csv([header] + rows)
    if args.format == "json":
        return _json(
            {
                "psi_root": format_sig(report["psi_root"], d),
                "records": [dict(zip(header, r)) for r in rows],
                "notes": report["notes"],
            }
        )
    notes = "\n".join(f"- {n}" for n in report["notes"])
    return (
        f"psi root: {format_sig(report['psi_root'], d)}\n\n"
        + _text_table(header, rows)
        + "\nNotes:\n"
        + notes
        + "\n"
    )


def cmd_specfun(args) -> str:
    cfg = PrecisionConfig(args.digits)
    arity = {"digamma": 1, "polygamma": 2, "zeta": 1, "hurwitz": 2}[args.fn]
    if len(args.args) != arity:
        raise UsageError(f"{args.fn} takes {arity} argument(s), got {len(args.args)}")
    if args.fn == "digamma":
        value = digamma(args.args[0], cfg)
    elif args.fn == "polygamma":
        value = polygamma(_int(args.args[0]), args.args[1], cfg)
    elif args.fn == "zeta":
        value = riemann_zeta(_int(args.args[0]), cfg)
    else:
        value = hurwitz_zeta(_int(args.args[0]), args.args[1], cfg)
    return format_sig(value, args.digits) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lagrangemin",
        description="Minimum of the Gamma function via Lagrange inversion of digamma.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ("text", "csv", "json")

    p = sub.add_parser("root", help="positive root of digamma")
    p.add_argument("--digits", type=_digits, default=20)
    p.set_defaults(func=cmd_root)

    p = sub.add_parser("expand", help="inversion series about an anchor")
    p.add_argument("--a", type=_real, default=Fraction(3, 2), help="anchor, e.g. 1, 3/2, 1.25")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--method", choices=("reversion", "faadibruno", "both"), default="reversion")
    p.add_argument("--digits", type=_digits, default=50)
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("table", help="rebuild a published convergence table")
    p.add_argument("--id", type=int, choices=(1, 2), required=True)
    p.add_argument("--digits", type=_digits, default=gammamin.TABLE_DIGITS)
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("audit", help="compare printed formulas, tables and engines")
    p.add_argument("--digits", type=_digits, default=gammamin.TABLE_DIGITS)
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("specfun", help="evaluate a special function")
    p.add_argument("--fn", choices=("digamma", "polygamma", "zeta", "hurwitz"), required=True)
    p.add_argument("--args", nargs="+", required=True, metavar="X")
    p.add_argument("--digits", type=_digits, default=20)
    p.set_defaults(func=cmd_specfun)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on bad flags
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except DomainError as exc:
        print(f"lagrangemin: domain error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        # unparseable numeric arguments (e.g. --args abc)
        parser.error(str(exc))
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
