"""Command-line front end: zeros, certificates, verification sweeps, plot data.

Exit codes: 0 ok, 1 usage or domain error, 2 unsupported branch,
3 inconclusive verification.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable, Sequence

from .branch import BranchIndex
from .errors import (
    ConvergenceError,
    DomainError,
    InconclusiveError,
    NewtonStepError,
    UnsupportedBranchError,
)
from .polylog import eulerian, eulerian_zeros, find_polylog_zeros, sobolev_approx, sobolev_epsilon
from .verify import curve_g, curve_h, winding_count
from .zero_finder import find_zero, has_zero, polar_rectangle

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_INCONCLUSIVE = 0, 1, 2, 3
NO_ZERO_MSG = "no zero: requires -|B|/2 < A <= |B|/2"
CURVE_HEADER = "curve,param,value,residual"
POLYLOG_HEADER = "j,seed_re,seed_im,zero_re,zero_im,dist"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


# --- serialization --------------------------------------------------------


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def encode(obj: Any) -> str:
    """Compact JSON with 17-significant-digit floats and complex as {re, im}."""
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, complex):
        return '{"re":' + fmt_float(obj.real) + ',"im":' + fmt_float(obj.imag) + "}"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(json.dumps(str(k)) + ":" + encode(v) for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(encode(v) for v in obj) + "]"
    if hasattr(obj, "item"):
        return encode(obj.item())
    raise TypeError(f"cannot encode {type(obj).__name__}")


def record(kind: str, payload: dict) -> dict:
    return {"kind": kind, "schema_version": SCHEMA_VERSION, "payload": payload}


def decode_complex(d: dict) -> complex:
    return complex(d["re"], d["im"])


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _jsonl(records: Iterable[dict]) -> str:
    return "".join(encode(r) + "\n" for r in records)


def _csv_field(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return fmt_float(x)
    return str(x)


def _csv_line(fields: Sequence) -> str:
    return ",".join(_csv_field(f) for f in fields) + "\n"


# --- fan-out --------------------------------------------------------------


def worker_count() -> int:
    raw = os.environ.get("DILOG_ZEROS_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise UsageError(f"DILOG_ZEROS_THREADS must be an integer, got {raw!r}") from exc
    if n < 0:
        raise UsageError("DILOG_ZEROS_THREADS must be >= 0")
    return n if n > 0 else (os.cpu_count() or 1)


def fan_out(fn: Callable, items: Sequence) -> list:
    """Map fn over items; results come back in input order."""
    n = min(worker_count(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * n))))


# --- commands -------------------------------------------------------------


def zero_record(A: int, B: int, tol: float) -> dict:
    return record("zero", find_zero((A, B), tol).to_dict())


def _zero_task(args: tuple[int, int, float]) -> dict:
    return zero_record(*args)


def cmd_zero(A: int, B: int, tol: float) -> dict:
    if not has_zero((A, B)):
        raise UnsupportedBranchError(f"{NO_ZERO_MSG} (branch ({A},{B}))")
    return zero_record(A, B, tol)


def table_branches(bmax: int) -> list[BranchIndex]:
    if bmax < 0:
        raise UsageError("bmax must be >= 0")
    out = []
    for B in range(-bmax, bmax + 1):
        if B == 0:
            As = range(0, bmax + 1)
        else:
            As = (A for A in range(-abs(B), abs(B) + 1) if has_zero((A, B)))
        out.extend(BranchIndex(A, B) for A in As)
    return out


def cmd_table(bmax: int, tol: float) -> list[dict]:
    return fan_out(_zero_task, [(b.A, b.B, tol) for b in table_branches(bmax)])


def _count_task(b: tuple[int, int]) -> dict:
    return winding_count(b).to_dict()


def cmd_verify(amax: int, bmax: int) -> list[dict]:
    if amax < 0 or bmax < 0:
        raise UsageError("amax and bmax must be >= 0")
    branches = [(A, B) for B in range(0, bmax + 1) for A in range(-amax, amax + 1)]
    return [record("count", d) for d in fan_out(_count_task, branches)]


def curve_samples(A: int, B: int, n: int) -> list[tuple[str, float, float, float]]:
    """n midpoint samples of g over [theta1, theta2] and of h over [r1, r2]."""
    if n < 1:
        raise UsageError("n must be >= 1")
    rect = polar_rectangle((A, B))
    rows = []
    for k in range(n):
        t = rect.theta1 + (k + 0.5) * (rect.theta2 - rect.theta1) / n
        c = curve_g(B, t)
        rows.append(("g", c.param, c.value, c.residual))
    for k in range(n):
        r = rect.r1 + (k + 0.5) * (rect.r2 - rect.r1) / n
        c = curve_h((A, B), r)
        rows.append(("h", c.param, c.value, c.residual))
    return rows


def cmd_curves(A: int, B: int, n: int) -> str:
    return CURVE_HEADER + "\n" + "".join(_csv_line(row) for row in curve_samples(A, B, n))


def polylog_payload(zs) -> dict:
    return {
        "s": zs.s,
        "method": zs.method,
        "rows": [
            {"j": j, "seed": seed, "zero": z, "dist": d} for j, seed, z, d in zs.rows()
        ],
        "flagged": list(zs.flagged),
    }


def cmd_polylog(s: complex, jmax: int):
    if jmax < 0:
        raise UsageError("jmax must be >= 0")
    return find_polylog_zeros(s, jmax)


def polylog_csv(zs) -> str:
    lines = [POLYLOG_HEADER + "\n"]
    for j, seed, z, d in zs.rows():
        sr, si = (seed.real, seed.imag) if seed is not None else (None, None)
        lines.append(_csv_line([j, sr, si, z.real, z.imag, d]))
    return "".join(lines)


def cmd_eulerian(m: int) -> dict:
    if not 1 <= m <= 60:
        raise DomainError("eulerian requires 1 <= m <= 60")
    P = eulerian(m)
    zs = eulerian_zeros(m)
    rows = []
    for j in range(1, m):
        lam = zs[m - 1 - j]
        rows.append(
            {"j": j, "zero": lam, "approx": sobolev_approx(m, j), "epsilon": sobolev_epsilon(m, j, lam)}
        )
    return record("eulerian", {"m": m, "coefficients": list(P.coeffs), "zeros": rows})


# --- text rendering -------------------------------------------------------


def _cplx(z: complex) -> str:
    sign = "-" if z.imag < 0 or (z.imag == 0 and math.copysign(1, z.imag) < 0) else "+"
    return f"{fmt_float(z.real)} {sign} {fmt_float(abs(z.imag))}i"


def zero_text(rec: dict) -> str:
    p = rec["payload"]
    lines = [
        f"branch ({p['A']},{p['B']})",
        f"zero          {_cplx(p['zero'])}",
        f"error_radius  {fmt_float(p['error_radius'])}",
        f"iterations    {p['iterations']}",
    ]
    if not p["tol_met"]:
        lines.append(f"note: requested tol {fmt_float(p['tol'])} not met in binary64")
    if p["tol_clamped"]:
        lines.append("note: tol clamped to the binary64 floor")
    if p["region_violations"]:
        lines.append(f"note: iterates outside the region: {p['region_violations']}")
    return "\n".join(lines) + "\n"


def eulerian_text(rec: dict) -> str:
    p = rec["payload"]
    lines = [f"A_{p['m']} coefficients: " + ",".join(str(c) for c in p["coefficients"])]
    if not p["zeros"]:
        lines.append("zeros: none")
    else:
        lines.append("j,zero,approx,epsilon")
        for r in p["zeros"]:
            lines.append(_csv_line([r["j"], r["zero"], r["approx"], r["epsilon"]]).rstrip("\n"))
    return "\n".join(lines) + "\n"


# --- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="dilog-zeros", description="Zeros of the branches of the dilogarithm.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, tol=False, jmax=False, json_flag=True):
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        if tol:
            p.add_argument("--tol", type=float, default=1e-12, help="requested error radius")
        if jmax:
            p.add_argument("--jmax", type=int, default=20, help="largest spiral seed index")
        if json_flag:
            p.add_argument("--json", action="store_true", help="emit JSON-lines records")

    p = sub.add_parser("zero", help="certified zero of one branch")
    p.add_argument("A", type=int)
    p.add_argument("B", type=int)
    common(p, tol=True)

    p = sub.add_parser("table", help="certificates for every branch with |B| <= bmax (JSON-lines)")
    p.add_argument("bmax", type=int)
    common(p, tol=True, json_flag=False)

    p = sub.add_parser("verify", help="argument-principle sweep over |A| <= amax, 0 <= B <= bmax")
    p.add_argument("amax", type=int)
    p.add_argument("bmax", type=int)
    common(p)

    p = sub.add_parser("curves", help="CSV samples of the two implicit curves")
    p.add_argument("A", type=int)
    p.add_argument("B", type=int)
    p.add_argument("n", type=int)
    common(p, json_flag=False)

    p = sub.add_parser("polylog", help="zeros of Li_s near the spiral seeds (CSV)")
    p.add_argument("s_re", type=float)
    p.add_argument("s_im", type=float)
    common(p, jmax=True)

    p = sub.add_parser("eulerian", help="Eulerian polynomial coefficients and zeros")
    p.add_argument("m", type=int)
    common(p)
    return ap


def _run(args) -> int:
    if args.command == "zero":
        rec = cmd_zero(args.A, args.B, args.tol)
        _emit(_jsonl([rec]) if args.json else zero_text(rec), args.out)
        return EXIT_OK

    if args.command == "table":
        _emit(_jsonl(cmd_table(args.bmax, args.tol)), args.out)
        return EXIT_OK

    if args.command == "verify":
        t0 = time.perf_counter()
        recs = cmd_verify(args.amax, args.bmax)
        bad = [r["payload"] for r in recs if r["payload"]["inconclusive"]]
        wrong = [
            r["payload"]
            for r in recs
            if not r["payload"]["inconclusive"] and r["payload"]["count"] != r["payload"]["expected"]
        ]
        if args.json or args.out:
            _emit(_jsonl(recs), args.out)
        for p in wrong:
            print(f"mismatch ({p['A']},{p['B']}): count {p['count']}, expected {p['expected']}", file=sys.stderr)
        for p in bad:
            print(f"inconclusive ({p['A']},{p['B']})", file=sys.stderr)
        summary = (
            f"checked {len(recs)} branches: {len(wrong)} mismatches, {len(bad)} inconclusive "
            f"({time.perf_counter() - t0:.2f} s)"
        )
        print(summary, file=sys.stderr if (args.json and not args.out) else sys.stdout)
        # a mismatch is a failed verification as well
        return EXIT_INCONCLUSIVE if (bad or wrong) else EXIT_OK

    if args.command == "curves":
        _emit(cmd_curves(args.A, args.B, args.n), args.out)
        return EXIT_OK

    if args.command == "polylog":
        zs = cmd_polylog(complex(args.s_re, args.s_im), args.jmax)
        if args.json:
            _emit(_jsonl([record("polylog", polylog_payload(zs))]), args.out)
        else:
            _emit(polylog_csv(zs), args.out)
        if zs.flagged:
            print(f"flagged seed indices: {zs.flagged}", file=sys.stderr)
        return EXIT_OK

    if args.command == "eulerian":
        rec = cmd_eulerian(args.m)
        _emit(_jsonl([rec]) if args.json else eulerian_text(rec), args.out)
        return EXIT_OK

    raise UsageError(f"unknown command {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _run(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedBranchError as exc:
        print(exc, file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (DomainError, ConvergenceError, NewtonStepError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
