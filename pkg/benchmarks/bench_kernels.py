"""Timing of the numba kernels against the pure numpy fallback.

Both implementations are imported side by side, so the ``RMDIRAC_NUMBA``
flag does not matter here.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from rmdirac import ModelParams, QuantumNumbers
from rmdirac import kernels
from rmdirac.dirac import default_window, packed_params


def best_of(fn, repeat):
    fn()  # warm-up, includes JIT compilation for the numba path
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--energies", type=int, default=200_000, help="residual grid size")
    parser.add_argument("--trials", type=int, default=64, help="trial energies propagated")
    parser.add_argument("--steps", type=int, default=20_000, help="RK4 steps per trial")
    args = parser.parse_args(argv)

    params = ModelParams(symmetry="spin", v1=-13.54, v2=-0.51, alpha=0.25, c_sym=2.56, r_e=2.39)
    qn = QuantumNumbers(0, -2, "spin")
    p = packed_params(qn, params)
    lo, hi = default_window(params)
    grid = np.linspace(lo, hi, args.energies)

    h = 1e-3
    g, rm = kernels.potential_tables(p, kernels.EXACT, 0.01, h, args.steps)
    trials = np.linspace(-0.9, -0.1, args.trials)
    f0 = np.full(args.trials, 1e-4)
    df0 = np.ones(args.trials)

    cases = [
        ("residual_grid", lambda: kernels.residual_grid_nb(grid, p),
         lambda: kernels.residual_grid_np(grid, p)),
        ("propagate", lambda: kernels.propagate_nb(trials, p, g, rm, h, f0, df0),
         lambda: kernels.propagate_np(trials, p, g, rm, h, f0, df0)),
    ]
    print(f"{'kernel':14s} {'numba (s)':>10s} {'numpy (s)':>10s} {'speedup':>8s}")
    for name, nb, np_ in cases:
        a, b = nb(), np_()
        assert np.allclose(a, b, rtol=1e-10, atol=0, equal_nan=True), name
        t_nb, t_np = best_of(nb, args.repeat), best_of(np_, args.repeat)
        print(f"{name:14s} {t_nb:10.4f} {t_np:10.4f} {t_np / t_nb:8.1f}")


if __name__ == "__main__":
    main()
