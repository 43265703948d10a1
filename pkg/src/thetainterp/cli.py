"""Command-line interface.

Subcommands:

* ``coeffs``      exact polynomial coefficients of one basis form
* ``eval-basis``  one basis function sampled on a grid (CSV)
* ``interpolate`` reconstruct a function from a sample-set JSON file (CSV)
* ``verify``      run the self-verification suite
* ``plot-data``   grid of the first even interpolation combinations (CSV)

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
errors.  Grid evaluations are dispatched over a thread pool sized by the
THETA_INTERP_THREADS environment variable (unset or 0 means one thread
per CPU); output row order is deterministic regardless of thread count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import basis, checks, interp
from .forms import FormError, build_form


class _UsageError(Exception):
    """Bad arguments or environment; reported on stderr with exit code 2."""


def _thread_count() -> int:
    raw = os.environ.get("THETA_INTERP_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise _UsageError("THETA_INTERP_THREADS must be an integer, got %r" % raw)
    if n < 0:
        raise _UsageError("THETA_INTERP_THREADS must be >= 0")
    return n if n > 0 else (os.cpu_count() or 1)


def _grid_points(text: str) -> list[float]:
    """Parse 'min:max:steps' into steps+1 equally spaced points."""
    parts = text.split(":")
    if len(parts) != 3:
        raise _UsageError("grid must be 'min:max:steps', got %r" % text)
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise _UsageError("grid must be 'min:max:steps', got %r" % text)
    if steps < 1 or not hi > lo:
        raise _UsageError("grid requires max > min and steps >= 1")
    return [lo + (hi - lo) * k / steps for k in range(steps + 1)]


def _map_grid(fn, xs: list[float]) -> list:
    """Evaluate fn on the grid, in parallel, preserving order."""
    nthreads = _thread_count()
    if nthreads == 1 or len(xs) == 1:
        return [fn(x) for x in xs]
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        return list(pool.map(fn, xs))


def _fmt(v: float) -> str:
    return "%.17g" % v


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_coeffs(args) -> int:
    try:
        spec = build_form(args.parity, args.eps, args.n)
    except FormError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps({
            "parity": spec.parity,
            "eps": spec.eps,
            "n": spec.n,
            "poly": ["%d/%d" % (c.numerator, c.denominator) for c in spec.poly],
        }))
    else:
        print("[%s]" % ", ".join(str(c) for c in spec.poly))
    return 0


def _cmd_eval_basis(args) -> int:
    xs = _grid_points(args.grid)
    if args.parity == "even":
        name = "b_%d^%s" % (args.n, args.eps)
        fn = lambda x: basis.eval_b(args.eps, args.n, x, abs_tol=args.abs_tol).value
    else:
        name = "d_%d^%s" % (args.n, args.eps)
        fn = lambda x: basis.eval_d(args.eps, args.n, x, abs_tol=args.abs_tol).value
    try:
        values = _map_grid(fn, xs)
    except (basis.BasisError, FormError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    print("x,%s" % name)
    for x, v in zip(xs, values):
        print("%s,%s" % (_fmt(x), _fmt(v)))
    return 0


def _cmd_interpolate(args) -> int:
    try:
        with open(args.samples, "r", encoding="utf-8") as fh:
            samples = interp.sampleset_from_json(fh.read())
    except (OSError, ValueError, KeyError, interp.InterpError) as exc:
        print("error: cannot read sample set: %s" % exc, file=sys.stderr)
        return 2
    rec = (interp.reconstruct_even if samples.parity == "even"
           else interp.reconstruct_odd)
    xs = _grid_points(args.grid)
    rows = _map_grid(lambda x: rec(samples, x, abs_tol=args.abs_tol), xs)
    print("x,re,im,tail_bound")
    for x, r in zip(xs, rows):
        v = complex(r.value)
        print("%s,%s,%s,%s" % (_fmt(x), _fmt(v.real), _fmt(v.imag),
                               _fmt(r.tail_bound)))
    return 0


def _cmd_verify(args) -> int:
    names = args.checks if args.checks else None
    try:
        results = checks.run_checks(names)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print("%-*s  %s  %6.1fs  %s" % (width, r.name, status, r.seconds, r.detail))
        if not r.passed:
            failed += 1
    print("%d/%d checks passed" % (len(results) - failed, len(results)))
    return 1 if failed else 0


def _cmd_plot_data(args) -> int:
    xs = _grid_points(args.grid)
    ns = list(range(args.count))

    def row(x):
        out = []
        for n in ns:
            a, ahat = basis.eval_a(n, x, abs_tol=args.abs_tol)
            out.extend((a.value, ahat.value))
        return out

    rows = _map_grid(row, xs)
    header = ["x"]
    for n in ns:
        header.extend(("a_%d" % n, "ahat_%d" % n))
    print(",".join(header))
    for x, vals in zip(xs, rows):
        print(",".join(_fmt(v) for v in [x] + vals))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="thetainterp",
        description="Fourier interpolation basis on the nodes sqrt(n)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="exact polynomial coefficients of a form")
    p.add_argument("--parity", choices=("even", "odd"), required=True)
    p.add_argument("--eps", choices=("+", "-"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("eval-basis", help="sample one basis function on a grid")
    p.add_argument("--parity", choices=("even", "odd"), required=True)
    p.add_argument("--eps", choices=("+", "-"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", default="-4:4:160", help="min:max:steps")
    p.add_argument("--abs-tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_eval_basis)

    p = sub.add_parser("interpolate",
                       help="reconstruct a function from node samples")
    p.add_argument("samples", help="sample-set JSON file")
    p.add_argument("--grid", default="-4:4:160", help="min:max:steps")
    p.add_argument("--abs-tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_interpolate)

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("checks", nargs="*",
                   help="check names (default: all; see --list)")
    p.add_argument("--list", action="store_true", dest="list_checks",
                   help="list available check names and exit")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("plot-data",
                       help="grid of the first even interpolation combinations")
    p.add_argument("--grid", default="-4:4:160", help="min:max:steps")
    p.add_argument("--count", type=int, default=3,
                   help="number of node functions a_0..a_{count-1}")
    p.add_argument("--abs-tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_plot_data)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "verify" and getattr(args, "list_checks", False):
        for name in checks.check_names():
            print(name)
        return 0
    try:
        return args.func(args)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
