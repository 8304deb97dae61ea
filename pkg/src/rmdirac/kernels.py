"""Hot numerical kernels, each in a numba and a pure-numpy flavour.

The public names (``residual_grid``, ``bisect_residual``, ``propagate``,
``shoot_path``, ``count_sign_changes``) are bound at import time according
to :data:`rmdirac._backend.USE_NUMBA`.  Both flavours stay importable under
``*_nb`` / ``*_np`` so tests and benchmarks can compare them.

Model parameters travel as a flat float array ``p`` (see :func:`pack`).
"""

import math

import numpy as np

from ._backend import USE_NUMBA, njit

# indices into the packed parameter vector
N, OMEGA, M, V1, V2, CSYM, ALPHA, RE, D0, D1, D2, SIGN, VARIANT = range(13)
SPIN, PSPIN = -1.0, 1.0
DERIVATION, PRINTED = 0.0, 1.0
EXACT, PEKERIS = 0, 1


def pack(n, omega, m, v1, v2, c_sym, alpha, r_e, d0, d1, d2, sign, variant):
    """Flatten residual/shooting inputs; ``sign`` is -1 (spin) or +1 (p-spin)."""
    return np.array(
        [n, omega, m, v1, v2, c_sym, alpha, r_e, d0, d1, d2, sign, variant],
        dtype=np.float64,
    )


# ---------------------------------------------------------------------------
# energy residual
# ---------------------------------------------------------------------------


def _residual_scalar(e, p):
    n = p[N]
    w = p[OMEGA]
    m = p[M]
    s = p[SIGN]
    al2 = p[ALPHA] * p[ALPHA]
    re2 = p[RE] * p[RE]
    a = e - s * m - p[CSYM]
    et2 = a * (e + s * m)
    vt1 = p[V1] * a
    vt2 = p[V2] * a
    eps2 = (w * p[D0] / re2 - et2 + vt2) / (4.0 * al2)
    beta1 = (w * (p[D0] + p[D1] + p[D2]) / re2 - et2 - vt2) / (4.0 * al2)
    drad = 1.0 + (w * p[D2] / re2 + 4.0 * vt1) / al2
    if eps2 < 0.0 or beta1 < 0.0 or drad < 0.0:
        return np.nan
    big_n = n + 0.5 * (math.sqrt(drad) - 1.0) + 1.0
    if p[VARIANT] == DERIVATION:
        return math.sqrt(eps2) + big_n - math.sqrt(beta1)
    lhs = -a * (e + s * m - p[V2])
    num = -2.0 * p[V1] * a + w * (p[D1] + p[D2]) / re2
    brk = num / (4.0 * al2 * big_n) - big_n
    return lhs - (-w * p[D0] / re2 + al2 * brk * brk)


_residual_scalar_nb = njit(_residual_scalar)


@njit
def residual_grid_nb(energies, p):
    out = np.empty(energies.shape[0])
    for i in range(energies.shape[0]):
        out[i] = _residual_scalar_nb(energies[i], p)
    return out


def residual_grid_np(energies, p):
    e = np.asarray(energies, dtype=np.float64)
    n, w, m, s = p[N], p[OMEGA], p[M], p[SIGN]
    al2 = p[ALPHA] ** 2
    re2 = p[RE] ** 2
    a = e - s * m - p[CSYM]
    et2 = a * (e + s * m)
    vt1 = p[V1] * a
    vt2 = p[V2] * a
    eps2 = (w * p[D0] / re2 - et2 + vt2) / (4.0 * al2)
    beta1 = (w * (p[D0] + p[D1] + p[D2]) / re2 - et2 - vt2) / (4.0 * al2)
    drad = 1.0 + (w * p[D2] / re2 + 4.0 * vt1) / al2
    bad = (eps2 < 0.0) | (beta1 < 0.0) | (drad < 0.0)
    with np.errstate(invalid="ignore"):
        big_n = n + 0.5 * (np.sqrt(drad) - 1.0) + 1.0
        if p[VARIANT] == DERIVATION:
            out = np.sqrt(eps2) + big_n - np.sqrt(beta1)
        else:
            lhs = -a * (e + s * m - p[V2])
            num = -2.0 * p[V1] * a + w * (p[D1] + p[D2]) / re2
            brk = num / (4.0 * al2 * big_n) - big_n
            out = lhs - (-w * p[D0] / re2 + al2 * brk * brk)
    out[bad] = np.nan
    return out


@njit
def bisect_residual_nb(lo, hi, p, tol):
    f_lo = _residual_scalar_nb(lo, p)
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        f_mid = _residual_scalar_nb(mid, p)
        if f_mid == 0.0:
            return mid
        if np.isnan(f_mid):
            # an invalid midpoint means the bracket straddles a radicand
            # boundary; callers reject such brackets
            return np.nan
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def bisect_residual_np(lo, hi, p, tol):
    f_lo = _residual_scalar(lo, p)
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        f_mid = _residual_scalar(mid, p)
        if f_mid == 0.0:
            return mid
        if math.isnan(f_mid):
            return math.nan
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# shooting on the second-order radial equation
#
# W(r; E) = omega * g(r) + a * (b + sigma * RM(r)), F'' = W F, with
#   spin : a = m + E - C_s,  b = m - E, sigma = +1
#   pspin: a = m - E + C_ps, b = m + E, sigma = -1
# where g is 1/r^2 (exact) or the Pekeris approximant.  The r-dependent
# pieces g and RM are tabulated once on the RK4 half-step lattice.
# ---------------------------------------------------------------------------


def potential_tables(p, mode, r0, h, nsteps):
    """g(r) and RM(r) sampled at r0 + k h / 2, k = 0 .. 2 nsteps."""
    r = r0 + 0.5 * h * np.arange(2 * nsteps + 1)
    x = np.exp(-2.0 * p[ALPHA] * r)
    rm = -4.0 * p[V1] * x / (1.0 + x) ** 2 + p[V2] * (1.0 - x) / (1.0 + x)
    if mode == EXACT:
        g = 1.0 / (r * r)
    else:
        u = x / (1.0 + x)
        g = (p[D0] + p[D1] * u + p[D2] * u * u) / (p[RE] * p[RE])
    return g, rm


def _ab(e, p):
    s = p[SIGN]
    a = -s * (e - s * p[M] - p[CSYM])
    b = p[M] + s * e
    return a, b, -s


@njit
def _rk4_nb(e, p, g, rm, h, f, df, store):
    """Integrate F'' = W F over the tabulated lattice; h may be negative."""
    s = p[SIGN]
    a = -s * (e - s * p[M] - p[CSYM])
    b = p[M] + s * e
    sig = -s
    w0 = p[OMEGA]
    nsteps = (g.shape[0] - 1) // 2
    path = np.empty(nsteps + 1 if store else 1)
    path[0] = f
    for k in range(nsteps):
        i = 2 * k
        wa = w0 * g[i] + a * (b + sig * rm[i])
        wb = w0 * g[i + 1] + a * (b + sig * rm[i + 1])
        wc = w0 * g[i + 2] + a * (b + sig * rm[i + 2])
        k1f = df
        k1d = wa * f
        k2f = df + 0.5 * h * k1d
        k2d = wb * (f + 0.5 * h * k1f)
        k3f = df + 0.5 * h * k2d
        k3d = wb * (f + 0.5 * h * k2f)
        k4f = df + h * k3d
        k4d = wc * (f + h * k3f)
        f = f + h * (k1f + 2.0 * k2f + 2.0 * k3f + k4f) / 6.0
        df = df + h * (k1d + 2.0 * k2d + 2.0 * k3d + k4d) / 6.0
        big = abs(f) + abs(df)
        if big > 1e150:
            f /= big
            df /= big
            if store:
                path[: k + 1] /= big
        if store:
            path[k + 1] = f
    return f, df, path


def _rk4_np(e, p, g, rm, h, f, df, store):
    """Vectorized over an array of energies ``e``."""
    e = np.asarray(e, dtype=np.float64)
    a, b, sig = _ab(e, p)
    w0 = p[OMEGA]
    nsteps = (g.shape[0] - 1) // 2
    f = np.array(f, dtype=np.float64) * np.ones_like(e)
    df = np.array(df, dtype=np.float64) * np.ones_like(e)
    path = [f.copy()] if store else None
    for k in range(nsteps):
        i = 2 * k
        wa = w0 * g[i] + a * (b + sig * rm[i])
        wb = w0 * g[i + 1] + a * (b + sig * rm[i + 1])
        wc = w0 * g[i + 2] + a * (b + sig * rm[i + 2])
        k1f = df
        k1d = wa * f
        k2f = df + 0.5 * h * k1d
        k2d = wb * (f + 0.5 * h * k1f)
        k3f = df + 0.5 * h * k2d
        k3d = wb * (f + 0.5 * h * k2f)
        k4f = df + h * k3d
        k4d = wc * (f + h * k3f)
        f = f + h * (k1f + 2.0 * k2f + 2.0 * k3f + k4f) / 6.0
        df = df + h * (k1d + 2.0 * k2d + 2.0 * k3d + k4d) / 6.0
        big = np.abs(f) + np.abs(df)
        over = big > 1e150
        if np.any(over):
            factor = np.where(over, big, 1.0)
            f = f / factor
            df = df / factor
            if store:
                path = [q / factor for q in path]
        if store:
            path.append(f.copy())
    return f, df, (np.array(path) if store else None)


@njit
def propagate_nb(energies, p, g, rm, h, f, df):
    """Advance (F, F') across one tabulated segment for each trial energy.

    Entries whose starting values are not finite stay NaN.
    """
    count = energies.shape[0]
    fo = np.full(count, np.nan)
    dfo = np.full(count, np.nan)
    for i in range(count):
        if not (np.isfinite(f[i]) and np.isfinite(df[i])):
            continue
        fe, dfe, _ = _rk4_nb(energies[i], p, g, rm, h, f[i], df[i], False)
        fo[i] = fe
        dfo[i] = dfe
    return fo, dfo


def propagate_np(energies, p, g, rm, h, f, df):
    e = np.asarray(energies, dtype=np.float64)
    ok = np.isfinite(f) & np.isfinite(df)
    fo = np.full(e.shape, np.nan)
    dfo = np.full(e.shape, np.nan)
    if np.any(ok):
        fo[ok], dfo[ok], _ = _rk4_np(e[ok], p, g, rm, h, f[ok], df[ok], False)
    return fo, dfo


def shoot_path_nb(e, p, g, rm, h, f, df):
    fe, dfe, path = _rk4_nb(float(e), p, g, rm, h, float(f), float(df), True)
    return fe, dfe, path


def shoot_path_np(e, p, g, rm, h, f, df):
    fe, dfe, path = _rk4_np(np.array([e]), p, g, rm, h, f, df, True)
    return float(fe[0]), float(dfe[0]), path[:, 0]


# ---------------------------------------------------------------------------
# node counting
# ---------------------------------------------------------------------------


@njit
def count_sign_changes_nb(values, threshold):
    count = 0
    last = 0.0
    for v in values:
        if abs(v) <= threshold:
            continue
        if last != 0.0 and (v > 0.0) != (last > 0.0):
            count += 1
        last = v
    return count


def count_sign_changes_np(values, threshold):
    v = np.asarray(values, dtype=np.float64)
    v = v[np.abs(v) > threshold]
    if v.size < 2:
        return 0
    return int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))


if USE_NUMBA:
    residual_grid = residual_grid_nb
    bisect_residual = bisect_residual_nb
    propagate = propagate_nb
    shoot_path = shoot_path_nb
    count_sign_changes = count_sign_changes_nb
else:
    residual_grid = residual_grid_np
    bisect_residual = bisect_residual_np
    propagate = propagate_np
    shoot_path = shoot_path_np
    count_sign_changes = count_sign_changes_np
