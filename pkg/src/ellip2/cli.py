"""Command-line front end: ``ellip2 eval | verify | export``.

Exit codes: 0 success, 1 tolerance exceeded (verify) or I/O failure (export),
2 domain violation, 3 non-convergence.
"""

import argparse
import io
import itertools
import json
import os
import sys
import tempfile
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CONFIG, SeriesConfig
from .errors import ConvergenceError, DomainError
from .params import ModulusPair
from .twoparam import (
    EvalResult, gen_E, gen_E_closed, gen_E_quad, gen_E_series, gen_E_symmetric,
    gen_K, gen_K_quad,
)

EXIT_OK, EXIT_TOL, EXIT_DOMAIN, EXIT_CONVERGENCE = 0, 1, 2, 3
CSV_FIELDS = ("k1", "k2", "method", "value", "error_estimate", "work", "status")
METHODS = ("quad", "series", "f4", "product", "auto")


def fmt(v):
    """17 significant digits: round-trips any double."""
    return format(float(v), ".17g")


@dataclass(frozen=True)
class SweepSpec:
    k1_range: tuple
    k2_range: tuple = None  # None means k2 = k1 (symmetric sweep)
    methods: tuple = ("quad", "series", "f4")
    tol: float = 1e-8

    def __post_init__(self):
        for rng in (self.k1_range, self.k2_range):
            if rng is None:
                continue
            lo, hi, steps = rng
            if not (0.0 <= lo <= hi < 1.0):
                raise DomainError(f"range ({lo}, {hi}) must satisfy 0 <= lo <= hi < 1")
            if int(steps) < 1:
                raise DomainError("steps must be >= 1")

    @property
    def k_equal(self):
        return self.k2_range is None

    def points(self):
        k1s = np.linspace(*self.k1_range[:2], int(self.k1_range[2]))
        if self.k_equal:
            return [(float(k), float(k)) for k in k1s]
        k2s = np.linspace(*self.k2_range[:2], int(self.k2_range[2]))
        return [(float(a), float(b)) for a, b in itertools.product(k1s, k2s)]


def admissible(k1, k2):
    try:
        ModulusPair(k1, k2)
    except DomainError:
        return False
    return True


def evaluate(k1, k2, method, kind="E", *, k_equal=False, tol=1e-12, cfg=None) -> EvalResult:
    """Run one named route; raises DomainError / ConvergenceError."""
    cfg = cfg or DEFAULT_CONFIG
    if kind == "K":
        if method in ("product", "auto"):
            return gen_K(k1, k2)
        if method == "quad":
            return gen_K_quad(k1, k2, tol=tol)
        raise DomainError(f"method {method!r} does not apply to K(k1,k2)")
    if method == "f4" and (k_equal or k1 == k2):
        return gen_E_symmetric(k1)
    if method == "quad":
        return gen_E_quad(k1, k2, tol=tol)
    if method == "series":
        return gen_E_series(k1, k2, cfg)
    if method == "f4":
        return gen_E_closed(k1, k2)
    if method == "auto":
        return gen_E(k1, k2, cfg, tol=tol)
    raise DomainError(f"method {method!r} does not apply to E(k1,k2)")


def _config(args):
    if args.max_terms is None:
        return DEFAULT_CONFIG
    return SeriesConfig(max_terms=args.max_terms)


def cmd_eval(args, out):
    k2 = args.k1 if args.k_equal else args.k2
    try:
        res = evaluate(args.k1, k2, args.method, args.kind, k_equal=args.k_equal,
                       tol=args.tol, cfg=_config(args))
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    print(f"{args.kind}(k1, k2) with k1 = {args.k1!r}, k2 = {k2!r}", file=out)
    print(f"value          = {fmt(res.value)}", file=out)
    print(f"method         = {res.method.value}", file=out)
    print(f"error_estimate = {fmt(res.error_estimate)}", file=out)
    print(f"work           = {res.terms_or_evals}", file=out)
    return EXIT_OK


def run_verify(spec: SweepSpec, kind="E", quad_tol=1e-12, cfg=None):
    """Evaluate every method at every grid point; return a report dict."""
    report = {"points": [], "skipped": [], "failures": [], "max_dev": 0.0,
              "worst": None, "covered": 0}
    for k1, k2 in spec.points():
        if not admissible(k1, k2):
            report["skipped"].append((k1, k2, None, "k1^2 + k2^2 >= 1"))
            continue
        values = {}
        for m in spec.methods:
            try:
                values[m] = evaluate(k1, k2, m, kind, k_equal=spec.k_equal,
                                     tol=quad_tol, cfg=cfg).value
            except DomainError as exc:
                report["skipped"].append((k1, k2, m, str(exc)))
            except ConvergenceError as exc:
                report["failures"].append((k1, k2, m, str(exc)))
        report["points"].append((k1, k2, values))
        if len(values) == len(spec.methods):
            report["covered"] += 1
        for a, b in itertools.combinations(sorted(values), 2):
            dev = abs(values[a] - values[b]) / abs(values[a])
            if report["worst"] is None or dev > report["max_dev"]:
                report["max_dev"] = dev
                report["worst"] = (k1, k2, a, b)
    return report


def cmd_verify(args, out):
    try:
        spec = _sweep(args, methods=tuple(args.methods.split(",")))
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    report = run_verify(spec, args.kind, quad_tol=args.quad_tol, cfg=_config(args))
    for k1, k2, m, why in report["skipped"]:
        what = "point" if m is None else f"method {m}"
        print(f"skip  k1={fmt(k1)} k2={fmt(k2)} {what}: {why}", file=out)
    for k1, k2, m, why in report["failures"]:
        print(f"FAIL  k1={fmt(k1)} k2={fmt(k2)} method {m}: {why}", file=out)
    if not report["points"]:
        print("no admissible grid points", file=sys.stderr)
        return EXIT_DOMAIN
    print(f"points evaluated     = {len(report['points'])}", file=out)
    print(f"all methods covered  = {report['covered']}", file=out)
    print(f"max pairwise rel dev = {fmt(report['max_dev'])}", file=out)
    if report["worst"]:
        k1, k2, a, b = report["worst"]
        print(f"worst point          = k1={fmt(k1)} k2={fmt(k2)} ({a} vs {b})", file=out)
    if report["failures"]:
        print("result: FAIL (non-convergence)", file=out)
        return EXIT_CONVERGENCE
    ok = report["max_dev"] <= spec.tol
    print(f"result: {'PASS' if ok else 'FAIL'} at tol {fmt(spec.tol)}", file=out)
    return EXIT_OK if ok else EXIT_TOL


def export_records(spec: SweepSpec, method, kind="E", quad_tol=1e-12, cfg=None):
    records = []
    for k1, k2 in spec.points():
        rec = {"k1": k1, "k2": k2, "method": method, "value": None,
               "error_estimate": None, "work": None, "status": "ok"}
        if not admissible(k1, k2) and not (method == "f4" and spec.k_equal):
            rec["status"] = "domain_skip"
        else:
            try:
                res = evaluate(k1, k2, method, kind, k_equal=spec.k_equal,
                               tol=quad_tol, cfg=cfg)
                rec.update(method=res.method.value, value=res.value,
                           error_estimate=res.error_estimate, work=res.terms_or_evals)
            except DomainError:
                rec["status"] = "domain_skip"
            except ConvergenceError:
                rec["status"] = "no_convergence"
        records.append(rec)
    return records


def _cell(name, v):
    if v is None:
        return ""
    if name in ("k1", "k2", "value", "error_estimate"):
        return fmt(v)
    return str(v)


def render_csv(records):
    buf = io.StringIO()
    buf.write(",".join(CSV_FIELDS) + "\n")
    for rec in records:
        buf.write(",".join(_cell(f, rec[f]) for f in CSV_FIELDS) + "\n")
    return buf.getvalue()


def render_json(records):
    # numbers are written as 17-digit literals, identical to the CSV text
    rows = []
    for rec in records:
        parts = []
        for f in CSV_FIELDS:
            v = rec[f]
            if v is None:
                text = "null"
            elif f in ("method", "status"):
                text = json.dumps(v)
            else:
                text = _cell(f, v)
            parts.append(f"{json.dumps(f)}: {text}")
        rows.append("  {" + ", ".join(parts) + "}")
    return "[\n" + ",\n".join(rows) + "\n]\n"


def write_atomic(path, text):
    """Write via a temporary file in the target directory; no partial files."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ellip2-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_export(args, out):
    try:
        spec = _sweep(args, methods=(args.method,))
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    records = export_records(spec, args.method, args.kind, quad_tol=args.tol, cfg=_config(args))
    text = render_csv(records) if args.format == "csv" else render_json(records)
    if args.out in (None, "-"):
        out.write(text)
        return EXIT_OK
    try:
        write_atomic(args.out, text)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_TOL
    return EXIT_OK


def _sweep(args, methods):
    k2_range = None if args.k_equal else tuple(args.k2_range)
    return SweepSpec(tuple(args.k1_range), k2_range, methods, getattr(args, "tol", 1e-8))


def build_parser():
    p = argparse.ArgumentParser(prog="ellip2", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--kind", choices=("E", "K"), default="E",
                        help="which integral (default E)")
        sp.add_argument("--max-terms", type=int, default=None)
        sp.add_argument("--k-equal", action="store_true",
                        help="symmetric case k2 = k1")

    def ranges(sp):
        sp.add_argument("--k1-range", nargs=3, type=float, metavar=("LO", "HI", "STEPS"),
                        required=True)
        sp.add_argument("--k2-range", nargs=3, type=float, metavar=("LO", "HI", "STEPS"),
                        default=(0.0, 0.0, 1))

    e = sub.add_parser("eval", help="evaluate at one point")
    e.add_argument("--k1", type=float, required=True)
    e.add_argument("--k2", type=float, default=0.0)
    e.add_argument("--method", choices=METHODS, default="auto")
    e.add_argument("--tol", type=float, default=1e-12, help="quadrature tolerance")
    common(e)
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", help="cross-check methods over a grid")
    ranges(v)
    v.add_argument("--methods", default="quad,series,f4",
                   help="comma-separated subset of quad,series,f4,product")
    v.add_argument("--tol", type=float, default=1e-8, help="max pairwise relative deviation")
    v.add_argument("--quad-tol", type=float, default=1e-12)
    common(v)
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("export", help="write a grid of values as CSV or JSON")
    ranges(x)
    x.add_argument("--method", choices=METHODS, default="auto")
    x.add_argument("--format", choices=("csv", "json"), default="csv")
    x.add_argument("--out", default=None, help="output path (default stdout)")
    x.add_argument("--tol", type=float, default=1e-12, help="quadrature tolerance")
    common(x)
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None, out=None):
    args = build_parser().parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
