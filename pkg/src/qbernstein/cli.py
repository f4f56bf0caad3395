"""Command-line front end: ``eval``, ``table``, ``verify``, ``approx``.

Exit codes: 0 success, 1 identity failure, 2 usage or config error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import bernstein as bs
from .rational_core import FloatPoint, QPoint
from .verify import (
    IDENTITY_IDS,
    ConfigError,
    build_report,
    load_config,
    per_identity_counts,
    run_suites,
    summarize,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

FUNCTIONS = {
    "id": lambda x: x,
    "square": lambda x: x * x,
    "abs-half": lambda x: abs(x - 0.5),
    "exp-neg": lambda x: math.exp(-x),
}


class UsageError(Exception):
    pass


def fmt_exact(v) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def fmt_float(v: float) -> str:
    return format(v, ".17g")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {out}: {exc.strerror or exc}") from exc


def _float_point(q: float, x: float) -> FloatPoint:
    try:
        return FloatPoint(q, x)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_q(q: float) -> None:
    if not 0.0 < q < 1.0:
        raise UsageError(f"q must lie in (0, 1), got {q}")


def cmd_eval(args) -> int:
    if args.k < 0 or args.n < 0:
        raise UsageError("--k and --n must be non-negative")
    exact = [args.q_num, args.q_den, args.X_num, args.X_den]
    if args.classical:
        if args.x is None:
            raise UsageError("--classical needs --x")
        try:
            x = Fraction(args.x)
        except ValueError:
            raise UsageError(f"--x {args.x!r} is not a decimal or rational") from None
        if not 0 <= x <= 1:
            raise UsageError("x must lie in [0, 1]")
        print(fmt_exact(bs.classical_basis(args.k, args.n, x)))
        return EXIT_OK
    if any(v is not None for v in exact):
        if any(v is None for v in exact):
            raise UsageError("exact mode needs all of --q-num, --q-den, --X-num, --X-den")
        if args.q_den == 0 or args.X_den == 0:
            raise UsageError("denominators must be nonzero")
        try:
            p = QPoint(Fraction(args.q_num, args.q_den), Fraction(args.X_num, args.X_den))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(fmt_exact(bs.q_basis(args.k, args.n, p)))
        return EXIT_OK
    if args.q is None or args.x is None:
        raise UsageError("give either an exact point (--q-num/--q-den/--X-num/--X-den) or --q and --x")
    try:
        x = float(args.x)
    except ValueError:
        raise UsageError(f"--x {args.x!r} is not a number") from None
    print(fmt_float(bs.q_basis(args.k, args.n, _float_point(args.q, x))))
    return EXIT_OK


def sample_grid(samples: int) -> list:
    return [j / samples for j in range(samples + 1)]


def basis_table(n: int, q: float, samples: int) -> tuple:
    header = ["x"] + [f"B{k}" for k in range(n + 1)]
    rows = []
    for x in sample_grid(samples):
        fp = FloatPoint(q, x)
        rows.append([x] + [bs.q_basis(k, n, fp) for k in range(n + 1)])
    return header, rows


def _render(header, rows, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        doc = dict(extra or {})
        doc.update({"columns": header, "rows": rows})
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([[repr(v) if isinstance(v, float) else v for v in row] for row in rows])
        return buf.getvalue()
    widths = [max(len(h), 12) for h in header]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(f"{v:.10g}".rjust(w) for v, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def _check_sizes(n: int, samples: int) -> None:
    if n < 0:
        raise UsageError("--n must be non-negative")
    if samples < 1:
        raise UsageError("--samples must be at least 1")


def cmd_table(args) -> int:
    _check_sizes(args.n, args.samples)
    _check_q(args.q)
    header, rows = basis_table(args.n, args.q, args.samples)
    fmt = args.format or "csv"
    _emit(_render(header, rows, fmt, {"n": args.n, "q": args.q}), args.out)
    return EXIT_OK


def approx_rows(fn: str, n: int, q: float, samples: int) -> list:
    f = FUNCTIONS[fn]
    nodes = [f(j / n) for j in range(n + 1)] if n else [f(0.0)]
    rows = []
    for x in sample_grid(samples):
        fp = FloatPoint(q, x)
        value = sum(nodes[j] * bs.q_basis(j, n, fp) for j in range(n + 1))
        fx = f(x)
        rows.append([x, fx, value, abs(value - fx)])
    return rows


def cmd_approx(args) -> int:
    if args.fn not in FUNCTIONS:
        raise UsageError(f"unknown function {args.fn!r}; choose from {', '.join(FUNCTIONS)}")
    _check_sizes(args.n, args.samples)
    _check_q(args.q)
    rows = approx_rows(args.fn, args.n, args.q, args.samples)
    sup = max(r[3] for r in rows)
    header = ["x", "f", "Bnq_f", "abs_diff"]
    fmt = args.format or "text"
    if fmt == "json":
        text = _render(header, rows, "json", {"fn": args.fn, "n": args.n, "q": args.q, "sup_norm": sup})
    else:
        text = _render(header, rows, fmt)
        text += f"# sup_norm={sup!r}\n" if fmt == "csv" else f"sup_norm {sup!r}\n"
    _emit(text, args.out)
    return EXIT_OK


def _verify_text(results) -> str:
    lines = []
    for identity_id, c in per_identity_counts(results).items():
        lines.append(f"{identity_id:<18} pass={c['pass']:<6} fail={c['fail']}")
    for r in results:
        if not r.passed:
            params = " ".join(f"{k}={v}" for k, v in r.parameters.items())
            lines.append(f"FAIL {r.identity_id} {params} left={r.witness.get('left')} right={r.witness.get('right')}")
    s = summarize(results)
    lines.append(f"total pass={s['pass']} fail={s['fail']}")
    return "\n".join(lines) + "\n"


def _verify_csv(results) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["identity_id", "parameters", "status", "left", "right"])
    for r in results:
        params = ";".join(f"{k}={v}" for k, v in r.parameters.items())
        writer.writerow([r.identity_id, params, r.status, r.witness.get("left", ""), r.witness.get("right", "")])
    return buf.getvalue()


def cmd_verify(args) -> int:
    try:
        cfg = load_config(args.config or [])
        if args.parallel:
            cfg = cfg.__class__.from_mapping({"parallel": True}, cfg)
        only = [s.strip() for s in args.only.split(",") if s.strip()] if args.only else None
        results = run_suites(cfg, only)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    fmt = args.format or "text"
    if fmt == "json":
        text = json.dumps(build_report(cfg, results), indent=1) + "\n"
    elif fmt == "csv":
        text = _verify_csv(results)
    else:
        text = _verify_text(results)
    _emit(text, args.out)
    return EXIT_OK if summarize(results)["fail"] == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default=None)
    common.add_argument("--out", metavar="FILE", default=None)
    common.add_argument("--parallel", action="store_true")

    parser = argparse.ArgumentParser(prog="qbernstein", description="Modified q-Bernstein polynomials, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate one basis polynomial")
    ev.add_argument("--k", type=int, required=True)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--q-num", type=int)
    ev.add_argument("--q-den", type=int)
    ev.add_argument("--X-num", type=int)
    ev.add_argument("--X-den", type=int)
    ev.add_argument("--q", type=float)
    ev.add_argument("--x")
    ev.add_argument("--classical", action="store_true", help="classical basis at rational/decimal --x")
    ev.set_defaults(func=cmd_eval)

    tb = sub.add_parser("table", parents=[common], help="tabulate B_{0,n}..B_{n,n} over [0, 1]")
    tb.add_argument("--n", type=int, required=True)
    tb.add_argument("--q", type=float, required=True)
    tb.add_argument("--samples", type=int, default=20)
    tb.set_defaults(func=cmd_table)

    vf = sub.add_parser("verify", parents=[common], help="check every identity on a grid")
    vf.add_argument("--config", action="append", metavar="FILE|key=value")
    vf.add_argument("--only", metavar="ID[,ID...]", help=f"subset of {', '.join(IDENTITY_IDS)}")
    vf.set_defaults(func=cmd_verify)

    ap = sub.add_parser("approx", parents=[common], help="apply the operator to a built-in function")
    ap.add_argument("--fn", required=True)
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--q", type=float, required=True)
    ap.add_argument("--samples", type=int, default=20)
    ap.set_defaults(func=cmd_approx)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qbernstein {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qbernstein {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
