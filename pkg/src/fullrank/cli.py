"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import durfee, genfun, verify
from .rankstats import BackendMismatch, eta_moment, rank_table

CAPS = {"enumerate": 50, "genfun": 120, "both": 50, "moments": 120}
TABLE_COMMANDS = ("ranks", "moments", "durfee-count", "fullrank", "genfun-coeffs", "roots-eval")


class UsageError(Exception):
    pass


def _rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _render(header, rows, fmt, meta) -> str:
    if fmt == "csv":
        return _rows_to_csv(header, rows)
    if fmt == "json":
        return json.dumps({**meta, "rows": [dict(zip(header, r)) for r in rows]}, sort_keys=True) + "\n"
    widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h)) for i, h in enumerate(header)]
    lines = ["  ".join(str(h).rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(str(v).rjust(w) for v, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def _check_cap(args, backend):
    cap = CAPS.get(backend, 120)
    if args.nmax > cap and not args.force:
        raise UsageError(f"--nmax {args.nmax} exceeds the {backend} cap of {cap}; pass --force to override")


def _check_symbol_cap(args, k, backend):
    if backend in ("enumerate", "both") and k >= 3 and args.nmax > durfee.ENUMERATION_CAP and not args.force:
        raise UsageError(f"enumerating {k}-marked symbols refuses --nmax > {durfee.ENUMERATION_CAP} without --force")


def cmd_ranks(args):
    backend = args.backend or "enumerate"
    if backend not in ("enumerate", "genfun", "both"):
        raise UsageError("ranks: --backend must be enumerate, genfun or both")
    _check_cap(args, backend)
    table = rank_table(args.nmax, backend)
    rows = [(m, n, table.N(m, n)) for n in range(args.nmax + 1) for m in sorted(table.row(n))]
    return ("m", "n", "count"), rows, {"nmax": args.nmax, "backend": backend}, 0


def cmd_moments(args):
    _check_cap(args, "moments")
    kmax = args.marks or 6
    table = rank_table(args.nmax)
    rows = [(k, n, eta_moment(k, n, table)) for k in range(1, kmax + 1) for n in range(args.nmax + 1)]
    return ("k", "n", "eta"), rows, {"nmax": args.nmax, "kmax": kmax}, 0


def _durfee_values(k, nmax, backend, force):
    if backend == "genfun":
        return [p(1) for p in genfun.rk_coefficients(k, nmax).coeffs]
    return [durfee.d_count(k, n, backend, force) for n in range(nmax + 1)]


def cmd_durfee_count(args):
    k = args.marks or 2
    backend = args.backend or "moments"
    if backend not in ("enumerate", "moments", "genfun", "both"):
        raise UsageError("durfee-count: --backend must be enumerate, moments, genfun or both")
    _check_cap(args, backend)
    _check_symbol_cap(args, k, backend)
    if backend == "both":
        a = _durfee_values(k, args.nmax, "enumerate", args.force)
        b = _durfee_values(k, args.nmax, "moments", args.force)
        c = _durfee_values(k, args.nmax, "genfun", args.force)
        rows = [(k, n, a[n], int(a[n] == b[n] == c[n])) for n in range(args.nmax + 1)]
        status = 0 if all(r[3] for r in rows) else 1
        return ("k", "n", "count", "agree"), rows, {"nmax": args.nmax, "backend": backend}, status
    values = _durfee_values(k, args.nmax, backend, args.force)
    rows = [(k, n, v) for n, v in enumerate(values)]
    return ("k", "n", "count"), rows, {"nmax": args.nmax, "backend": backend}, 0


def cmd_fullrank(args):
    l = args.marks or 2
    c = args.modulus or 2 * l + 1
    if c < 2:
        raise UsageError("--modulus must be at least 2")
    backend = args.backend or "genfun"
    if backend not in ("enumerate", "genfun", "both"):
        raise UsageError("fullrank: --backend must be enumerate, genfun or both")
    _check_cap(args, backend)
    _check_symbol_cap(args, l, backend)
    meta = {"nmax": args.nmax, "marks": l, "modulus": c, "backend": backend}
    if backend == "both":
        a = verify.nf_residues(l, c, args.nmax, "enumerate")
        b = verify.nf_residues(l, c, args.nmax, "genfun")
        rows = [(l, c, n, r, b[n][r], int(a[n][r] == b[n][r])) for n in range(args.nmax + 1) for r in range(c)]
        status = 0 if all(row[5] for row in rows) else 1
        return ("l", "c", "n", "b", "count", "agree"), rows, meta, status
    table = verify.nf_residues(l, c, args.nmax, backend)
    rows = [(l, c, n, r, table[n][r]) for n in range(args.nmax + 1) for r in range(c)]
    return ("l", "c", "n", "b", "count"), rows, meta, 0


def cmd_genfun_coeffs(args):
    _check_cap(args, "genfun")
    k = args.marks or 1
    series = genfun.rk_coefficients(k, args.nmax)
    rows = [(k, n, e, c) for n, p in enumerate(series.coeffs) for e, c in p.items()]
    return ("k", "n", "exponent", "coeff"), rows, {"nmax": args.nmax, "marks": k}, 0


def cmd_roots_eval(args):
    _check_cap(args, "genfun")
    k = args.marks or 4
    c = args.modulus or 2 * k + 1
    d = args.divisor or 1
    if c < 2 or not 1 <= d <= c:
        raise UsageError("need --modulus >= 2 and 1 <= --divisor <= modulus")
    values = genfun.substitute_root(genfun.rk_coefficients(k, args.nmax), c, d)
    meta = {"nmax": args.nmax, "marks": k, "modulus": c, "divisor": d}
    if args.format == "text":
        rows = [(n, str(v)) for n, v in enumerate(values.coeffs)]
        return ("n", "value"), rows, meta, 0
    rows = [(k, c, d, n, e, a) for n, v in enumerate(values.coeffs) for e, a in enumerate(v.coeffs) if a]
    return ("k", "c", "d", "n", "power", "coeff"), rows, meta, 0


def cmd_verify(args):
    if args.name != "all" and args.name not in verify.CHECK_NAMES:
        raise UsageError(f"unknown check {args.name!r}; choose from all, {', '.join(verify.CHECK_NAMES)}")
    reports = verify.run(args.name, args.nmax)
    status = 0 if all(r.passed for r in reports) else 1
    fmt = args.format or "text"
    if fmt == "json":
        text = json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=1) + "\n"
    elif fmt == "csv":
        text = _rows_to_csv(
            ("check", "status", "witnesses", "millis"),
            [(r.check, r.status, len(r.witnesses), r.millis) for r in reports],
        )
    else:
        lines = []
        for r in reports:
            lines.append(f"{r.status.upper():4}  {r.check}  ({r.cases} cases, {r.millis} ms)")
            for w in r.witnesses:
                lines.append(f"      n={w['n']} expected={w['expected']} actual={w['actual']}")
        text = "\n".join(lines) + "\n"
    return text, status


COMMANDS = {
    "ranks": cmd_ranks,
    "moments": cmd_moments,
    "durfee-count": cmd_durfee_count,
    "fullrank": cmd_fullrank,
    "genfun-coeffs": cmd_genfun_coeffs,
    "roots-eval": cmd_roots_eval,
}


def _add_common(p, default_format):
    p.add_argument("--nmax", type=int, default=18, help="largest n (default 18)")
    p.add_argument("--marks", type=int, help="number of marks k/l")
    p.add_argument("--modulus", type=int, help="modulus c")
    p.add_argument("--divisor", type=int, help="root exponent d")
    p.add_argument("--backend", choices=("enumerate", "genfun", "moments", "both"))
    p.add_argument("--format", choices=("csv", "json", "text"), default=default_format)
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.add_argument("--force", action="store_true", help="lift the size caps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fullrank", description="Partition ranks and marked Durfee symbols.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in TABLE_COMMANDS:
        _add_common(sub.add_parser(name), "csv")
    p = sub.add_parser("verify", help="run a named check or all of them")
    p.add_argument("name", help="check name or 'all'")
    _add_common(p, "text")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.nmax < 0:
        print("fullrank: --nmax must be non-negative", file=sys.stderr)
        return 2
    if args.marks is not None and args.marks < 1:
        print("fullrank: --marks must be positive", file=sys.stderr)
        return 2
    try:
        if args.command == "verify":
            text, status = cmd_verify(args)
        else:
            header, rows, meta, status = COMMANDS[args.command](args)
            text = _render(header, rows, args.format, {"command": args.command, **meta})
    except (UsageError, ValueError) as exc:
        print(f"fullrank: {exc}", file=sys.stderr)
        return 2
    except BackendMismatch as exc:
        print(f"fullrank: backend mismatch: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
