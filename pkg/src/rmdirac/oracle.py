"""Numerical checks of the analytic eigenpairs.

Three independent probes:

* :func:`ode_residual` plugs the closed-form major component into the
  second-order radial equation (Pekeris form) with a 5-point stencil;
* :func:`shoot_eigenvalue` solves that equation by RK4 shooting, either with
  the Pekeris approximant (same problem as the analytic solution) or with the
  exact 1/r^2 centrifugal term;
* :func:`count_nodes` counts sign changes of a sampled function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from . import kernels
from .dirac import (
    BoundState,
    ModelParams,
    QuantumNumbers,
    default_window,
    major_component,
    packed_params,
)
from .errors import AccuracyError, DomainError, LevelNotFound
from .grid import R_MIN_DEFAULT, RadialGrid
from .pekeris import approx_inverse_r2

__all__ = [
    "MODES",
    "OracleReport",
    "RadialGrid",
    "Shooter",
    "count_nodes",
    "ode_residual",
    "oracle_report",
    "shoot_eigenvalue",
]

MODES = ("pekeris", "exact")
H_MAX = 0.002
NODE_THRESHOLD = 1e-12


@dataclass(frozen=True)
class OracleReport:
    """Outcome of the numerical checks for one analytic state.

    ``E_numeric`` is the shooting energy in ``mode``; both shooting energies
    are kept.  NaN marks a shooting run that found no level.
    """

    mode: str
    E_analytic: float
    E_numeric: float
    max_ode_residual: float
    nodes: int
    variant: str
    E_pekeris: float
    E_exact: float

    @property
    def deviation(self):
        return self.E_numeric - self.E_analytic


def _potential_w(params, omega, E, r, g):
    """W(r; E) of F'' = W F for the major component."""
    rm = params.rosen_morse(r)
    if params.symmetry.value == "spin":
        return omega * g + (params.m + E - params.c_sym) * (params.m - E + rm)
    return omega * g + (params.m - E + params.c_sym) * (params.m + E - rm)


def _second_derivative(f, h):
    """5-point central stencil; values at f[2:-2]."""
    return (-f[4:] + 16.0 * f[3:-1] - 30.0 * f[2:-2] + 16.0 * f[1:-3] - f[:-4]) / (12.0 * h * h)


def ode_residual(state: BoundState, grid: RadialGrid | None = None, bound=None):
    """max |F'' - W F| / max |F''| over the interior of ``grid``.

    F is the analytic major component and W uses the Pekeris approximant,
    so only the stencil truncation error should remain.  With ``bound`` set,
    the truncation error is estimated by Richardson comparison against the
    doubled spacing and an :class:`AccuracyError` is raised if it exceeds
    ``bound``.
    """
    if grid is None:
        grid = RadialGrid.for_decay(state.decay_rate)
    if not grid.r_min < state.params.r_e < grid.r_max:
        raise DomainError("grid must straddle r_e")
    r = grid.r
    h = grid.spacing
    f, _ = major_component(
        state.E, state.qn, state.params, r, state.coeffs, state.epsilon, state.exponent
    )
    d2 = _second_derivative(f, h)
    inner = r[2:-2]
    w = _potential_w(state.params, state.omega, state.E, inner, approx_inverse_r2(inner, state.coeffs))
    scale = np.max(np.abs(d2))
    if not scale > 0:
        raise AccuracyError("second derivative vanishes on the grid", estimate=math.inf)
    residual = float(np.max(np.abs(d2 - w * f[2:-2])) / scale)
    if bound is not None:
        coarse = _second_derivative(f[::2], 2.0 * h)
        # coarse[k] sits at r[2k + 4], i.e. d2[2k + 2]
        fine = d2[2 : 2 + 2 * coarse.size : 2]
        estimate = float(np.max(np.abs(fine - coarse)) / 15.0 / scale)
        if estimate > bound:
            raise AccuracyError(
                f"stencil error estimate {estimate:.3e} exceeds {bound:.3e}", estimate=estimate
            )
    return residual


def count_nodes(values, rel_threshold=NODE_THRESHOLD):
    """Strict sign changes of a sampled function, endpoints excluded.

    Samples with |F| <= rel_threshold * max|F| are skipped so rounding
    noise around a zero tail does not register as nodes.
    """
    v = np.asarray(values, dtype=float)[1:-1]
    if v.size < 2:
        return 0
    peak = float(np.max(np.abs(v)))
    if peak == 0.0:
        return 0
    return int(kernels.count_sign_changes(np.ascontiguousarray(v), rel_threshold * peak))


class Shooter:
    """Matching function for one (params, qn, mode) on fixed RK4 lattices.

    The outward leg runs from ``r_min`` to r_e over decade-wide segments
    (the step bound min(0.002, 1/(50 sqrt(max|W|))) is applied per segment,
    since omega/r^2 dominates only near the origin); the inward leg runs
    from ``r_max`` to r_e.  The mismatch is the normalized Wronskian of the
    two legs at r_e.
    """

    def __init__(self, params: ModelParams, qn: QuantumNumbers, mode="pekeris",
                 window=None, r_min=R_MIN_DEFAULT, r_max=None):
        if mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
        self.params = params
        self.qn = QuantumNumbers(qn.n, qn.kappa, params.symmetry)
        self.mode = mode
        self.coeffs = params.coefficients
        self.p = packed_params(self.qn, params, self.coeffs)
        self.omega = float(self.p[kernels.OMEGA])
        lo, hi = default_window(params) if window is None else window
        if not lo < hi:
            raise DomainError(f"invalid window {window!r}")
        self.window = (float(lo), float(hi))
        r_e = params.r_e
        if r_max is None:
            r_max = self._default_r_max()
        if not 0 < r_min < r_e < r_max:
            raise DomainError("need 0 < r_min < r_e < r_max")
        self.r_min, self.r_max = float(r_min), float(r_max)
        self._mode_code = kernels.EXACT if mode == "exact" else kernels.PEKERIS
        edges = [self.r_min]
        while edges[-1] * 10.0 < r_e:
            edges.append(edges[-1] * 10.0)
        edges.append(r_e)
        self.outward = [self._segment(a, b) for a, b in zip(edges[:-1], edges[1:])]
        self.inward = self._segment(self.r_max, r_e)

    def _g(self, r):
        if self.mode == "exact":
            return 1.0 / (r * r)
        return approx_inverse_r2(r, self.coeffs)

    def _k_inf_sq(self, E):
        p = self.params
        g_inf = 0.0 if self.mode == "exact" else self.coeffs.D0 / p.r_e**2
        return _potential_w(p, self.omega, np.asarray(E, dtype=float), np.inf, g_inf)

    def _default_r_max(self):
        lo, hi = self.window
        k2 = self._k_inf_sq(np.linspace(lo, hi, 201))
        k2 = k2[k2 > 0]
        k = math.sqrt(float(np.min(k2))) if k2.size else 0.0
        if k <= 0:
            return 40.0
        return min(max(40.0, 12.0 * math.log(10.0) / k), 400.0)

    def _segment(self, start, stop):
        lo, hi = self.window
        r = np.linspace(min(start, stop), max(start, stop), 257)
        g = self._g(r)
        wmax = max(float(np.max(np.abs(_potential_w(self.params, self.omega, e, r, g))))
                   for e in (lo, 0.5 * (lo + hi), hi))
        h_target = min(H_MAX, 1.0 / (50.0 * math.sqrt(max(wmax, 1e-300))))
        nsteps = max(1, int(math.ceil(abs(stop - start) / h_target)))
        h = (stop - start) / nsteps
        g_tab, rm_tab = kernels.potential_tables(self.p, self._mode_code, start, h, nsteps)
        return g_tab, rm_tab, h, start

    def _left(self, energies):
        if self.mode == "exact":
            s0 = 0.5 * (1.0 + math.sqrt(1.0 + 4.0 * self.omega))
            f0 = np.full(energies.shape, self.r_min**s0)
            df0 = np.full(energies.shape, s0 * self.r_min ** (s0 - 1.0))
            return f0, df0
        f0 = np.empty(energies.shape)
        df0 = np.empty(energies.shape)
        for i, e in enumerate(energies):
            f, df = major_component(e, self.qn, self.params, np.array([self.r_min]), self.coeffs)
            f0[i], df0[i] = f[0], df[0]
        return f0, df0

    def _right(self, energies):
        k2 = self._k_inf_sq(energies)
        ok = k2 > 0
        f1 = np.where(ok, 1.0, np.nan)
        df1 = np.where(ok, -np.sqrt(np.where(ok, k2, 0.0)), np.nan)
        return f1, df1

    def mismatch(self, energies):
        """Normalized Wronskian at r_e; NaN where a boundary value is undefined."""
        e = np.atleast_1d(np.asarray(energies, dtype=float))
        f, df = self._left(e)
        for g, rm, h, _ in self.outward:
            f, df = kernels.propagate(e, self.p, g, rm, h, f, df)
        fi, dfi = self._right(e)
        g, rm, h, _ = self.inward
        fi, dfi = kernels.propagate(e, self.p, g, rm, h, fi, dfi)
        norm = np.hypot(f, df) * np.hypot(fi, dfi)
        with np.errstate(invalid="ignore", divide="ignore"):
            return (df * fi - f * dfi) / norm

    def solution(self, E):
        """(r, F) of the matched shooting solution at energy ``E``."""
        e = np.array([float(E)])
        f0, df0 = self._left(e)
        f, df = float(f0[0]), float(df0[0])
        rs, paths = [], []
        for g, rm, h, start in self.outward:
            f_start = f
            f, df, path = kernels.shoot_path(E, self.p, g, rm, h, f, df)
            if f_start != 0.0 and path[0] != 0.0:
                ratio = path[0] / f_start
                paths = [q * ratio for q in paths]
            skip = 1 if rs else 0
            rs.append(start + h * np.arange(path.size)[skip:])
            paths.append(np.asarray(path)[skip:])
        f1, df1 = self._right(e)
        g, rm, h, start = self.inward
        fi, _, path_in = kernels.shoot_path(E, self.p, g, rm, h, float(f1[0]), float(df1[0]))
        scale = f / fi if fi != 0.0 else 1.0
        r_in = start + h * np.arange(path_in.size)
        rs.append(r_in[::-1][1:])
        paths.append((np.asarray(path_in) * scale)[::-1][1:])
        return np.concatenate(rs), np.concatenate(paths)

    def nodes(self, E):
        return count_nodes(self.solution(E)[1])

    def roots(self, step, tol):
        """All matching-function roots in the window, in increasing energy."""
        lo, hi = self.window
        count = max(2, int(math.ceil((hi - lo) / step)) + 1)
        grid = np.linspace(lo, hi, count)
        values = self.mismatch(grid)
        ok = np.isfinite(values[:-1]) & np.isfinite(values[1:])
        change = ok & (np.signbit(values[:-1]) != np.signbit(values[1:]))

        def scalar(e):
            return float(self.mismatch(e)[0])

        found = []
        for i in np.flatnonzero(change):
            root = brentq(scalar, grid[i], grid[i + 1], xtol=tol, rtol=4.0 * np.finfo(float).eps)
            # a sign flip without a zero (jump) leaves an O(1) mismatch;
            # genuine roots can be steep, so the cut is loose
            if abs(scalar(root)) < 1e-2:
                found.append(root)
        return found


def shoot_eigenvalue(params: ModelParams, qn: QuantumNumbers, mode="pekeris", window=None,
                     tol=1e-10, step=None, nodes=None, r_min=R_MIN_DEFAULT, r_max=None):
    """Energy (fm^-1) at which the shooting legs match.

    Among several roots in ``window`` the one nearest the window centre is
    returned; in exact mode only roots whose solution has ``nodes`` sign
    changes (default ``qn.n``) qualify.

    Raises
    ------
    LevelNotFound
        No admissible root in the window, or the window lies entirely in
        the continuum (k_inf^2 <= 0).
    """
    shooter = Shooter(params, qn, mode, window, r_min, r_max)
    lo, hi = shooter.window
    if step is None:
        step = min(1e-2, (hi - lo) / 20.0)
    k2 = shooter._k_inf_sq(np.linspace(lo, hi, 64))
    if not np.any(k2 > 0):
        raise LevelNotFound("window lies in the continuum (k_inf^2 <= 0)")
    roots = shooter.roots(step, tol)
    if mode == "exact":
        want = qn.n if nodes is None else nodes
        roots = [e for e in roots if shooter.nodes(e) == want]
    elif nodes is not None:
        roots = [e for e in roots if shooter.nodes(e) == nodes]
    if not roots:
        raise LevelNotFound(f"no {mode}-mode root in [{lo}, {hi}]")
    centre = 0.5 * (lo + hi)
    return float(min(roots, key=lambda e: abs(e - centre)))


def oracle_report(state: BoundState, mode="exact", grid: RadialGrid | None = None,
                  pekeris_halfwidth=0.05, exact_halfwidth=2.0, tol=1e-10) -> OracleReport:
    """Run every check for ``state``; shooting failures are reported as NaN."""
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    if grid is None:
        grid = RadialGrid.for_decay(state.decay_rate)
    E = state.E

    def attempt(m, half, step):
        try:
            return shoot_eigenvalue(state.params, state.qn, m, (E - half, E + half), tol, step)
        except LevelNotFound:
            return math.nan

    e_pek = attempt("pekeris", pekeris_halfwidth, 1e-3)
    e_exact = attempt("exact", exact_halfwidth, 1e-2)
    residual = ode_residual(state, grid)
    f, _ = major_component(E, state.qn, state.params, grid.r, state.coeffs,
                           state.epsilon, state.exponent)
    return OracleReport(
        mode=mode,
        E_analytic=E,
        E_numeric=e_exact if mode == "exact" else e_pek,
        max_ode_residual=residual,
        nodes=count_nodes(f),
        variant=state.variant,
        E_pekeris=e_pek,
        E_exact=e_exact,
    )
