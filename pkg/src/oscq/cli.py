"""Command-line surface: polynomial zeros, invariant suites, and
asymptotic-formula comparisons, emitted as RFC 4180 CSV plus a JSON run
manifest.

Exit codes: 0 success, 1 failed verification, 2 solver failure (or refused
long run), 3 indeterminate Hankel determinant, 4 point outside the
requested regime's domain.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import tempfile
import time

from mpmath import mp, mpc, mpf

from . import parametrix as px
from .moments import (IndeterminateHankelError, SolverError, monic_op,
                      rescale_to_tilde)
from .mpfun import DomainError, workprec
from .smallnorm import EPS_DEFAULT, RHO_DEFAULT, CutoffChi
from .verify import SUITES, run_suite
from .zeros import find_zeros, zero_line_stats

DESK_N_CEILING = 64
QUAD_MAX_LEVEL = 10


def _digits(prec: int) -> int:
    return int(math.ceil(prec * 0.30103)) + 2


def fmt(x, prec: int) -> str:
    """Full-precision decimal serialization (locale-free, '.' decimal)."""
    with workprec(prec):
        return mp.nstr(x, _digits(prec))


def _atomic_write(path: str, text: str):
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".oscq-tmp-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_csv(path: str, header, rows):
    import io
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    w.writerows(rows)
    _atomic_write(path, buf.getvalue())


def _manifest(path: str, payload: dict):
    _atomic_write(path + ".manifest.json",
                  json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _base_manifest(command: str, prec_used: int, t0: float) -> dict:
    return {
        "command": command,
        "precision_bits_used": prec_used,
        "delta": "0.2",
        "eps": fmt(EPS_DEFAULT, 64),
        "rho": fmt(RHO_DEFAULT, 64),
        "chi_profile": CutoffChi().profile_id,
        "quadrature": {"max_level": QUAD_MAX_LEVEL,
                       "target": "2^-(prec/4)"},
        "wall_time_s": round(time.time() - t0, 3),
    }


def _parse_n_list(text: str):
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",") if t]


def _require_desk_scale(n: int, allow_long: bool, parser):
    if n > DESK_N_CEILING and not allow_long:
        parser.error(f"n={n} exceeds the desk-scale ceiling "
                     f"{DESK_N_CEILING}; pass --allow-long to proceed")


def cmd_zeros(args, parser) -> int:
    t0 = time.time()
    _require_desk_scale(args.n, args.allow_long, parser)
    prec_floor = 64 if args.prec == "auto" else int(args.prec)
    try:
        poly = monic_op(args.n, args.nu, prec_floor)
        tilde = rescale_to_tilde(poly, args.n)
        zs = find_zeros(tilde)
    except IndeterminateHankelError as exc:
        print(f"indeterminate Hankel determinant: {exc}", file=sys.stderr)
        return 3
    except SolverError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return 2
    prec = zs.prec
    rows = []
    with workprec(prec):
        scale = mpc(0, 1) * args.n * mp.pi
        for idx, (w, res) in enumerate(zip(zs.roots, zs.residuals)):
            z = scale * w
            rows.append([idx, fmt(z.real, prec), fmt(z.imag, prec),
                         fmt(w.real, prec), fmt(w.imag, prec),
                         fmt(res, prec)])
    _write_csv(args.out, ["index", "re", "im", "re_w", "im_w", "residual"],
               rows)
    man = _base_manifest("zeros", prec, t0)
    man.update({"nu": args.nu, "n": args.n, "delta": str(args.delta),
                "output": os.path.basename(args.out),
                "csv_schema": "index,re,im,re_w,im_w,residual "
                              "(raw frame re/im; rescaled frame re_w/im_w)"})
    stats = zero_line_stats(zs, args.n, args.nu, args.delta)
    with workprec(prec):
        man["residual_summaries"] = {
            "hankel_solve_residual": fmt(poly.residual, 64),
            "max_newton_residual": fmt(max(zs.residuals), 64),
            "zero_line": {
                "max_dev": None if stats.max_dev is None
                else fmt(stats.max_dev, 64),
                "epsilon_n": fmt(stats.epsilon_n, 64),
                "max_dev_over_epsilon_n": None if stats.max_dev is None
                else fmt(stats.max_dev / stats.epsilon_n, 64),
                "zeros_considered": stats.zeros_considered,
            },
        }
    _manifest(args.out, man)
    return 0


def cmd_verify(args, parser) -> int:
    t0 = time.time()
    kwargs = {}
    if args.nu is not None:
        kwargs["nu"] = args.nu
    if args.n_list is not None:
        kwargs["n_list"] = _parse_n_list(args.n_list)
    if args.prec is not None:
        kwargs["prec"] = int(args.prec)
    records = run_suite(args.suite, **kwargs)
    passed = all(r.passed for r in records)
    report = {
        "suite": args.suite,
        "params": {k: str(v) for k, v in kwargs.items()},
        "checks": [r.as_dict() for r in records],
        "passed": passed,
        "wall_time_s": round(time.time() - t0, 3),
    }
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0 if passed else 1


_OUTER_GRID = ("2i", "1.5", "-1.5+0.5i", "3", "0.5+2i")
_INNER_GRID = ("0.3", "0.5", "0.7", "0.45-0.02i", "-0.5")


def _parse_points(source: str, regime: str, prec: int):
    if source == "grid":
        raw = _OUTER_GRID if regime == "outer" else _INNER_GRID
        with workprec(prec):
            return [mp.mpmathify(t.replace("i", "j")) for t in raw]
    pts = []
    try:
        with open(source, newline="") as fh:
            rd = csv.reader(fh)
            header = next(rd)
            cols = {name: k for k, name in enumerate(header)}
            with workprec(prec):
                for row in rd:
                    pts.append(mpc(mpf(row[cols["z_re"]]),
                                   mpf(row[cols["z_im"]])))
    except (OSError, StopIteration, KeyError, ValueError) as exc:
        raise SystemExit(
            f"oscq: cannot read points file {source!r}: {exc}") from exc
    if not pts:
        raise SystemExit(f"oscq: points file {source!r} contains no points")
    return pts


def cmd_asymptotics(args, parser) -> int:
    t0 = time.time()
    _require_desk_scale(args.n, args.allow_long, parser)
    prec_floor = 256 if args.prec == "auto" else int(args.prec)
    try:
        poly = monic_op(args.n, args.nu, prec_floor)
        tilde = rescale_to_tilde(poly, args.n)
    except IndeterminateHankelError as exc:
        print(f"indeterminate Hankel determinant: {exc}", file=sys.stderr)
        return 3
    except SolverError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return 2
    prec = min(tilde.prec, max(prec_floor, 256))
    points = _parse_points(args.points, args.regime, prec)
    rows = []
    for z in points:
        try:
            if args.regime == "outer":
                pred = px.outer_eval(z, args.n, args.nu, prec)
            else:
                pred = px.inner_eval(z, args.n, args.nu, prec)
        except DomainError as exc:
            print(f"point {z} outside {args.regime} domain: {exc}",
                  file=sys.stderr)
            return 4
        with workprec(prec):
            actual = tilde.eval(z, tilde.prec)
            rel = abs(pred.value - actual) / abs(actual)
            rows.append([fmt(z.real, prec), fmt(z.imag, prec),
                         fmt(pred.value.real, prec),
                         fmt(pred.value.imag, prec),
                         fmt(mpc(actual).real, prec),
                         fmt(mpc(actual).imag, prec),
                         fmt(rel, 64), fmt(pred.error_scale, 64)])
    _write_csv(args.out, ["z_re", "z_im", "pred_re", "pred_im",
                          "actual_re", "actual_im", "rel_err",
                          "error_scale"], rows)
    man = _base_manifest("asymptotics", prec, t0)
    man.update({"nu": args.nu, "n": args.n, "regime": args.regime,
                "points": args.points, "output": os.path.basename(args.out),
                "csv_schema": "z_re,z_im,pred_re,pred_im,actual_re,"
                              "actual_im,rel_err,error_scale",
                "residual_summaries": {
                    "hankel_solve_residual": fmt(poly.residual, 64)}})
    _manifest(args.out, man)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="oscq",
        description="Orthogonal polynomials and complex Gaussian "
                    "quadrature for the oscillatory Bessel weight.")
    sub = p.add_subparsers(dest="command", required=True)

    pz = sub.add_parser("zeros", help="compute polynomial zeros (both "
                                      "frames) to CSV + manifest")
    pz.add_argument("--nu", required=True)
    pz.add_argument("--n", type=int, required=True)
    pz.add_argument("--prec", default="auto",
                    help="'auto' (adaptive) or bits")
    pz.add_argument("--delta", default="0.2",
                    help="disk-exclusion radius for zero-line stats")
    pz.add_argument("--allow-long", action="store_true",
                    help=f"permit n beyond the desk ceiling "
                         f"{DESK_N_CEILING}")
    pz.add_argument("--out", required=True)

    pv = sub.add_parser("verify", help="run a named invariant suite")
    pv.add_argument("--suite", required=True, choices=list(SUITES))
    pv.add_argument("--nu")
    pv.add_argument("--n-list", dest="n_list",
                    help="e.g. '1..10' or '16,32,64'")
    pv.add_argument("--prec")
    pv.add_argument("--out")

    pa = sub.add_parser("asymptotics",
                        help="compare polynomial values against the "
                             "asymptotic formulas")
    pa.add_argument("--nu", required=True)
    pa.add_argument("--n", type=int, required=True)
    pa.add_argument("--points", default="grid",
                    help="'grid' or a CSV file with z_re,z_im columns")
    pa.add_argument("--regime", required=True, choices=["outer", "inner"])
    pa.add_argument("--prec", default="auto")
    pa.add_argument("--allow-long", action="store_true")
    pa.add_argument("--out", required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"zeros": cmd_zeros, "verify": cmd_verify,
               "asymptotics": cmd_asymptotics}[args.command]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
