"""Command-line front end: values, Farey sweeps, check suites, table dumps.

Exit codes: 0 success, 1 check-suite failure (with a JSON failure report on
stdout), 2 usage error.  All floats print with 17 significant digits so the
output round-trips binary64 exactly; runs are deterministic for a given
argument vector regardless of FRAC_AUTOCORR_THREADS.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import autocorr, checks, estermann, periodic_series, phi, vasyunin
from .errors import FracAutocorrError


def _fmt(x) -> str:
    if isinstance(x, complex):
        return f"{x.real:.17g} {x.imag:+.17g}i"
    return f"{float(x):.17g}"


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _parse_complex(text: str) -> complex:
    return complex(text.replace(" ", ""))


def max_threads() -> int:
    """Parallelism cap from FRAC_AUTOCORR_THREADS (evaluation is currently
    single-threaded vectorised code, so any cap >= 1 is honoured)."""
    try:
        return max(1, int(os.environ.get("FRAC_AUTOCORR_THREADS", "1")))
    except ValueError:
        return 1


def _cmd_value(args) -> int:
    kind = args.quantity
    out: dict[str, object] = {"quantity": kind, "args": args.args}
    if kind == "A":
        lam = _parse_fraction(args.args[0])
        closed = autocorr.a_rational(lam.numerator, lam.denominator)
        quad = autocorr.a_quadrature(lam)
        out["value"] = closed
        out["quadrature"] = quad.value
        out["agreement_radius"] = abs(closed - quad.value) + quad.err
        lines = [
            f"A({lam}) = {_fmt(closed)}",
            f"quadrature = {_fmt(quad.value)} (radius {_fmt(quad.err)})",
            f"two-path agreement radius = {_fmt(out['agreement_radius'])}",
        ]
    elif kind == "V":
        p, q = int(args.args[0]), int(args.args[1])
        v = vasyunin.vasyunin_cot(p, q)
        out["value"] = v
        lines = [f"V({p},{q}) = {_fmt(v)}"]
    elif kind == "phi1":
        p, q = int(args.args[0]), int(args.args[1])
        v = phi.phi1_rational(p, q)
        out["value"] = v
        lines = [f"phi1({p}/{q}) = {_fmt(v)}"]
    elif kind == "phi2":
        x = _parse_fraction(args.args[0])
        r = phi.phi_n(2, x)
        out["value"] = r.value
        out["radius"] = r.err
        lines = [f"phi2({x}) = {_fmt(r.value)} (radius {_fmt(r.err)})"]
    elif kind in ("E", "G0", "G1"):
        s = _parse_complex(args.args[0])
        h, k = int(args.args[1]), int(args.args[2])
        fn = {"E": estermann.estermann, "G0": estermann.g0, "G1": estermann.g1}[kind]
        v = fn(s, h, k)
        out["value"] = [v.real, v.imag]
        lines = [f"{kind}({s}; {h}/{k}) = {_fmt(v)}"]
    elif kind == "gamma_rq":
        r_, q = int(args.args[0]), int(args.args[1])
        v = periodic_series.lehmer_gamma(r_, q)
        out["value"] = v
        lines = [f"gamma({r_},{q}) = {_fmt(v)}"]
    else:
        print(f"unknown quantity {kind!r}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(out))
    else:
        print("\n".join(lines))
    return 0


def _cmd_scan_farey(args) -> int:
    records = autocorr.farey_scan(args.order, Fraction(args.lo), Fraction(args.hi))
    autocorr.write_farey_csv(records, args.out)
    if args.svg:
        autocorr.write_farey_svg(records, args.svg)
    print(f"wrote {len(records)} rows to {args.out}")
    return 0


def _cmd_check(args) -> int:
    results = checks.run_suite(args.suite, qmax=args.qmax, tol=args.tol, seed=args.seed)
    failures = []
    for r in results:
        status = "ok  " if r.ok else "FAIL"
        print(f"{status} {r.suite}:{r.name}  value={_fmt(r.value)}  bound={_fmt(r.bound)}")
        if not r.ok:
            failures.append(
                {"suite": r.suite, "name": r.name, "value": r.value, "bound": r.bound}
            )
    worst = max(
        (r.value / r.bound) if r.bound else (math.inf if r.value > 0 else 0.0)
        for r in results
    )
    print(f"max residual ratio = {_fmt(worst)}")
    if failures:
        print(json.dumps({"failures": failures}))
        return 1
    return 0


def _cmd_dump(args) -> int:
    if args.table == "vtable":
        with open(args.out, "w", newline="\n") as fh:
            fh.write("q,p,V\n")
            for q in range(1, args.qmax + 1):
                for p, v in vasyunin.v_row(q):
                    fh.write(f"{q},{p},{v:.17g}\n")
        print(f"wrote vtable for q <= {args.qmax} to {args.out}")
        return 0
    if args.table == "fe-residuals":
        import math
        import random

        rng = random.Random(args.seed)
        rows = []
        for which in ("E", "Esin", "Ecos", "G0", "G1"):
            for _ in range(args.count):
                k = rng.randint(1, args.qmax)
                hs = [h for h in range(1, k + 1) if math.gcd(h, k) == 1]
                h = rng.choice(hs)
                while True:
                    s = complex(rng.uniform(-2.0, 3.0), rng.uniform(-3.0, 3.0))
                    if min(abs(s.real - n) for n in range(-4, 5)) > 0.15 or abs(s.imag) > 0.25:
                        if min(abs(s), abs(s - 1.0), abs(s + 1.0)) > 0.2:
                            break
                rows.append((which, s, h, k, estermann.functional_equation_residual(which, s, h, k)))
        with open(args.out, "w", newline="\n") as fh:
            fh.write("which,s_re,s_im,h,k,residual\n")
            for which, s, h, k, r in rows:
                fh.write(f"{which},{s.real:.17g},{s.imag:.17g},{h},{k},{r:.17g}\n")
        print(f"wrote {len(rows)} functional-equation residuals to {args.out}")
        return 0
    if args.table == "mellin-residuals":
        from .mellin_verify import mellin_identity_residual

        rows = []
        for re_ in (-0.7, -0.5, -0.3):
            for im in (0.0, 1.0, 2.0):
                s = complex(re_, im)
                rows.append(("MA", s, 0, 1, mellin_identity_residual("autocorr", s)))
                rows.append(("MDelta", s, 1, 2, mellin_identity_residual("delta", s, (1, 2))))
        with open(args.out, "w", newline="\n") as fh:
            fh.write("which,s_re,s_im,p,q,residual\n")
            for which, s, p, q, r in rows:
                fh.write(f"{which},{s.real:.17g},{s.imag:.17g},{p},{q},{r:.17g}\n")
        print(f"wrote {len(rows)} Mellin residuals to {args.out}")
        return 0
    print(f"unknown table {args.table!r}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="frac-autocorr",
        description="Values, sweeps and verification suites for the "
        "fractional-part autocorrelation toolkit.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("value", help="evaluate one quantity")
    p_val.add_argument("quantity", choices=["A", "V", "phi1", "phi2", "E", "G0", "G1", "gamma_rq"])
    p_val.add_argument("args", nargs="+", help="A p/q | V p q | phi1 p q | phi2 p/q | "
                       "E s h k | G0 s h k | G1 s h k | gamma_rq r q")
    p_val.add_argument("--format", choices=["text", "json"], default="text")
    p_val.set_defaults(fn=_cmd_value)

    p_scan = sub.add_parser("scan-farey", help="Farey sweep of A to CSV")
    p_scan.add_argument("--order", type=int, required=True)
    p_scan.add_argument("--lo", default="0")
    p_scan.add_argument("--hi", default="1")
    p_scan.add_argument("--out", required=True)
    p_scan.add_argument("--svg", default=None)
    p_scan.set_defaults(fn=_cmd_scan_farey)

    p_chk = sub.add_parser("check", help="run a named verification suite")
    p_chk.add_argument("--suite", required=True,
                       choices=["fracpart", "vasyunin", "estermann", "autocorr", "mellin", "all"])
    p_chk.add_argument("--qmax", type=int, default=None)
    p_chk.add_argument("--tol", type=float, default=None)
    p_chk.add_argument("--seed", type=int, default=1)
    p_chk.set_defaults(fn=_cmd_check)

    p_dump = sub.add_parser("dump", help="dump a table as CSV")
    p_dump.add_argument("table", choices=["vtable", "fe-residuals", "mellin-residuals"])
    p_dump.add_argument("--qmax", type=int, default=20)
    p_dump.add_argument("--count", type=int, default=10, help="fe-residuals: points per equation")
    p_dump.add_argument("--seed", type=int, default=1)
    p_dump.add_argument("--out", required=True)
    p_dump.set_defaults(fn=_cmd_dump)
    return ap


def run(argv: list[str] | None = None) -> int:
    """Entry point returning the exit code (0 ok, 1 check failure, 2 usage)."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse uses its own exit codes
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (FracAutocorrError, ValueError, ZeroDivisionError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
