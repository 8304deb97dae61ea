"""Command-line interface: ``rmdirac {spectrum,sweep,wavefunction,verify,pekeris}``.

Exit codes: 0 success, 2 a requested level was not found, 3 invalid
arguments.
"""

import argparse
import io
import itertools
import math
import sys

import numpy as np

from .dirac import (
    ModelParams,
    QuantumNumbers,
    Symmetry,
    VARIANTS,
    normalize,
    radial_components,
    solve_levels,
    spectroscopic_label,
)
from .errors import DomainError, LevelNotFound
from .grid import RadialGrid
from .oracle import MODES, count_nodes, oracle_report
from .pekeris import pekeris_coefficients
from .tables import TABLES, lookup

EXIT_OK, EXIT_MISSING, EXIT_ARGS = 0, 2, 3

DEFAULT_SWEEP_STATES = {
    Symmetry.SPIN: ["1p1/2", "1p3/2"],
    Symmetry.PSPIN: ["1d5/2", "0g7/2"],
}
SWEEP_RANGES = {"H": (0.0, 1.0), "alpha": (0.1, 0.35)}


class ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ArgumentError(message)


def fmt(value):
    """10 significant digits; empty for a missing value."""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return ""
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def emit(header, rows, out_format, stream):
    cells = [[fmt(v) for v in row] for row in rows]
    if out_format == "csv":
        stream.write(",".join(header) + "\n")
        for row in cells:
            stream.write(",".join(row) + "\n")
        return
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(header)]
    stream.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
    for row in cells:
        stream.write("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n")


def _params(args, tensor_h=None):
    sym = Symmetry(args.symmetry)
    c_sym = args.cs if sym is Symmetry.SPIN else args.cps
    h = args.tensor_h if tensor_h is None else tensor_h
    return ModelParams(args.m, args.v1, args.v2, args.alpha, args.re, h, sym, c_sym)


def _lowest(qn, params, args):
    states = solve_levels(qn, params, window=args.window, tol=args.tol, variant=args.variant)
    if not states:
        raise LevelNotFound(f"no level for n={qn.n}, kappa={qn.kappa}")
    return states[0]


def _energy_or_nan(qn, params, args):
    try:
        return _lowest(qn, params, args).E
    except LevelNotFound:
        return math.nan


def _tensor_h(args, fallback=0.5):
    return fallback if args.tensor_h is None else args.tensor_h


def run_spectrum(args, stream):
    sym = Symmetry(args.symmetry)
    if args.n is None and args.kappa is None:
        qns = [e.qn for e in TABLES[sym]]
    else:
        ns = args.n if args.n is not None else [0]
        kappas = args.kappa if args.kappa is not None else [-1]
        qns = [QuantumNumbers(n, k, sym) for n, k in itertools.product(ns, kappas)]
    h = _tensor_h(args)
    with_h = _params(args, h)
    without_h = _params(args, 0.0)
    rows, missing = [], False
    for qn in qns:
        e_h = _energy_or_nan(qn, with_h, args)
        e_0 = _energy_or_nan(qn, without_h, args)
        missing |= math.isnan(e_h) or math.isnan(e_0)
        rows.append((qn.n, qn.kappa, spectroscopic_label(qn, style="plain"), e_h, e_0))
    emit(["n", "kappa", "label", "E_H", "E_H0"], rows, args.format, stream)
    return EXIT_MISSING if missing else EXIT_OK


def run_sweep(args, stream):
    sym = Symmetry(args.symmetry)
    lo, hi = SWEEP_RANGES[args.param]
    lo = lo if args.start is None else args.start
    hi = hi if args.stop is None else args.stop
    if not lo < hi or args.steps < 2:
        raise ArgumentError("sweep needs from < to and steps >= 2")
    labels = args.states or DEFAULT_SWEEP_STATES[sym]
    qns = [QuantumNumbers.from_label(s, sym) for s in labels]
    fallback = 5.0 if (sym is Symmetry.SPIN and args.param == "alpha") else 0.5
    base = _params(args, _tensor_h(args, fallback))
    rows, missing = [], False
    for value in np.linspace(lo, hi, args.steps):
        value = float(value)
        params = base.with_(tensor_h=value) if args.param == "H" else base.with_(alpha=value)
        for label, qn in zip(labels, qns):
            e = _energy_or_nan(qn, params, args)
            missing |= math.isnan(e)
            rows.append((value, label, e))
    emit(["param", "state", "E"], rows, args.format, stream)
    return EXIT_MISSING if missing else EXIT_OK


def run_wavefunction(args, stream):
    sym = Symmetry(args.symmetry)
    qn = QuantumNumbers(args.n[0], args.kappa[0], sym)
    state = normalize(_lowest(qn, _params(args, _tensor_h(args)), args))
    grid = RadialGrid.for_decay(state.decay_rate, points=args.points)
    if args.r_max is not None:
        grid = RadialGrid(grid.r_min, args.r_max, args.points)
    r = grid.r
    f, g = radial_components(state, r)
    stream.write(f"# state {spectroscopic_label(qn, style='plain')} E={fmt(state.E)}\n")
    stream.write(f"# nodes F={count_nodes(f)} G={count_nodes(g)}\n")
    emit(["r", "F", "G"], zip(r, f, g), args.format, stream)
    return EXIT_OK


def run_verify(args, stream):
    sym = Symmetry(args.symmetry)
    qn = QuantumNumbers(args.n[0], args.kappa[0], sym)
    params = _params(args, _tensor_h(args))
    state = _lowest(qn, params, args)
    report = oracle_report(state, mode=args.mode)
    fields = [
        ("state", spectroscopic_label(qn, style="plain")),
        ("mode", report.mode),
        ("E_analytic", report.E_analytic),
        ("E_pekeris", report.E_pekeris),
        ("E_exact", report.E_exact),
        ("deviation", report.deviation),
        ("max_ode_residual", f"{report.max_ode_residual:.3e}"),
        ("nodes", report.nodes),
        ("variant", report.variant),
        ("table_variant", _matching_variant(qn, params, args)),
    ]
    emit(["field", "value"], fields, args.format, stream)
    if math.isnan(report.E_numeric):
        return EXIT_MISSING
    return EXIT_OK


def _matching_variant(qn, params, args, tol=1e-6):
    """Which residual variant reproduces the tabulated energy, if any."""
    entry = lookup(qn)
    if entry is None or params.with_(tensor_h=0.5) != ModelParams.reference(params.symmetry):
        return "n/a"
    target = {0.5: entry.E_h, 0.0: entry.E_h0}.get(params.tensor_h)
    if target is None:
        return "n/a"
    hits = []
    for variant in VARIANTS:
        levels = solve_levels(qn, params, window=args.window, tol=args.tol, variant=variant)
        if any(abs(s.E - target) <= tol for s in levels):
            hits.append(variant)
    return "+".join(hits) if hits else "none"


def run_pekeris(args, stream):
    c = pekeris_coefficients(args.alpha, args.re)
    res = c.matching_residuals()
    u = c.u_e
    fields = [
        ("D0", c.D0), ("D1", c.D1), ("D2", c.D2), ("u_e", u),
        ("value_residual", f"{res[0]:.3e}"),
        ("slope_residual", f"{res[1]:.3e}"),
        ("curvature_residual", f"{res[2]:.3e}"),
        ("D0+D1*u_e+D2*u_e^2", c.D0 + c.D1 * u + c.D2 * u * u),
    ]
    emit(["field", "value"], fields, args.format, stream)
    return EXIT_OK


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--symmetry", choices=[s.value for s in Symmetry], default="spin")
    common.add_argument("--m", type=float, default=1.0, help="mass (fm^-1)")
    common.add_argument("--v1", type=float, default=1.0)
    common.add_argument("--v2", type=float, default=-1.0)
    common.add_argument("--alpha", type=float, default=0.25, help="screening (fm^-1)")
    common.add_argument("--re", type=float, default=2.197224577, help="expansion point (fm)")
    common.add_argument("--cs", type=float, default=0.0, help="spin constant C_s")
    common.add_argument("--cps", type=float, default=-6.0, help="p-spin constant C_ps")
    common.add_argument("--tensor-h", type=float, default=None,
                        help="tensor strength H (default 0.5; 5.0 for spin alpha sweeps)")
    common.add_argument("--n", type=int, nargs="+", default=None,
                        help="radial index as used in the energy equation")
    common.add_argument("--kappa", type=int, nargs="+", default=None)
    common.add_argument("--window", type=float, nargs=2, default=None, metavar=("LO", "HI"))
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--variant", choices=VARIANTS, default="derivation")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--format", choices=["csv", "table"], default="csv")

    parser = _Parser(prog="rmdirac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="table of levels at H and H=0")
    sweep = sub.add_parser("sweep", parents=[common], help="levels versus H or alpha")
    sweep.add_argument("--param", choices=sorted(SWEEP_RANGES), default="H")
    sweep.add_argument("--from", dest="start", type=float, default=None)
    sweep.add_argument("--to", dest="stop", type=float, default=None)
    sweep.add_argument("--steps", type=int, default=11)
    sweep.add_argument("--states", nargs="+", default=None, help='labels such as "1d5/2"')
    wave = sub.add_parser("wavefunction", parents=[common], help="normalized F, G on a grid")
    wave.add_argument("--r-max", type=float, default=None)
    wave.add_argument("--points", type=int, default=2001)
    verify = sub.add_parser("verify", parents=[common], help="numerical oracle report")
    verify.add_argument("--mode", choices=MODES, default="exact")
    sub.add_parser("pekeris", parents=[common], help="centrifugal approximation coefficients")
    return parser


RUNNERS = {
    "spectrum": run_spectrum,
    "sweep": run_sweep,
    "wavefunction": run_wavefunction,
    "verify": run_verify,
    "pekeris": run_pekeris,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in ("wavefunction", "verify") and (args.n is None or args.kappa is None):
            raise ArgumentError(f"{args.command} needs --n and --kappa")
        buffer = io.StringIO()
        code = RUNNERS[args.command](args, buffer)
    except (ArgumentError, DomainError) as exc:
        print(f"rmdirac: error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except LevelNotFound as exc:
        print(f"rmdirac: {exc}", file=sys.stderr)
        return EXIT_MISSING
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(buffer.getvalue())
    else:
        sys.stdout.write(buffer.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
