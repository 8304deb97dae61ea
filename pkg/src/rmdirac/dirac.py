"""Spin and pseudospin symmetric Dirac levels for the Rosen-Morse potential.

Units are natural (hbar = c = 1): energies and masses in fm^-1, lengths in
fm.  Under spin symmetry the sum potential is Rosen-Morse and the upper
component F obeys a Schroedinger-like equation; under pseudospin symmetry the
difference potential is Rosen-Morse and the lower component G does.  The
component obeying the second-order equation is called the *major* one below.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property

import numpy as np

from . import kernels
from .errors import DomainError, LevelNotFound, NotNormalizableError, StateError
from .grid import RadialGrid
from .nu import NuInput
from .pekeris import PekerisCoefficients, pekeris_coefficients
from .specfun import hyp2f1_terminating, integrate, jacobi_p

__all__ = [
    "BoundState",
    "LevelQuantities",
    "ModelParams",
    "QuantumNumbers",
    "Symmetry",
    "VARIANTS",
    "coupling_omega",
    "default_window",
    "energy_residual",
    "level_quantities",
    "major_component",
    "normalize",
    "nu_input",
    "radial_components",
    "solve_levels",
    "spectroscopic_label",
]

VARIANTS = ("derivation", "printed")
SCAN_STEP = 1e-3
ORBITAL_LETTERS = "spdfghi"


class Symmetry(str, Enum):
    SPIN = "spin"
    PSPIN = "pspin"

    @property
    def sign(self):
        """-1 for spin, +1 for p-spin (kernel convention)."""
        return kernels.SPIN if self is Symmetry.SPIN else kernels.PSPIN


def _symmetry(value) -> Symmetry:
    try:
        return Symmetry(value)
    except ValueError:
        raise DomainError(f"unknown symmetry {value!r}") from None


@dataclass(frozen=True)
class ModelParams:
    """Physical inputs; ``c_sym`` is C_s (spin) or C_ps (p-spin)."""

    m: float = 1.0
    v1: float = 1.0
    v2: float = -1.0
    alpha: float = 0.25
    r_e: float = 2.197224577
    tensor_h: float = 0.5
    symmetry: Symmetry = Symmetry.SPIN
    c_sym: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "symmetry", _symmetry(self.symmetry))
        values = (self.m, self.v1, self.v2, self.alpha, self.r_e, self.tensor_h, self.c_sym)
        if not all(math.isfinite(v) for v in values):
            raise DomainError("model parameters must be finite")
        if not (self.m > 0 and self.alpha > 0 and self.r_e > 0):
            raise DomainError("m, alpha and r_e must be positive")

    @classmethod
    def reference(cls, symmetry="spin", **overrides):
        """Parameter set of the reference tables (C_s = 0, C_ps = -6)."""
        symmetry = _symmetry(symmetry)
        c_sym = 0.0 if symmetry is Symmetry.SPIN else -6.0
        return cls(**{"symmetry": symmetry, "c_sym": c_sym, **overrides})

    def with_(self, **changes):
        return replace(self, **changes)

    @cached_property
    def coefficients(self) -> PekerisCoefficients:
        return pekeris_coefficients(self.alpha, self.r_e)

    def rosen_morse(self, r):
        """-4 V1 x / (1 + x)^2 + V2 (1 - x) / (1 + x) with x = exp(-2 alpha r)."""
        x = np.exp(-2.0 * self.alpha * np.asarray(r, dtype=float))
        return -4.0 * self.v1 * x / (1.0 + x) ** 2 + self.v2 * (1.0 - x) / (1.0 + x)


@dataclass(frozen=True)
class QuantumNumbers:
    """Formula radial index ``n`` and spin-orbit number ``kappa``."""

    n: int
    kappa: int
    symmetry: Symmetry = Symmetry.SPIN

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DomainError(f"n={self.n!r} must be a nonnegative integer")
        if int(self.kappa) != self.kappa or self.kappa == 0:
            raise DomainError(f"kappa={self.kappa!r} must be a nonzero integer")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "kappa", int(self.kappa))
        object.__setattr__(self, "symmetry", _symmetry(self.symmetry))

    @property
    def l(self):
        return -self.kappa - 1 if self.kappa < 0 else self.kappa

    @property
    def l_tilde(self):
        return -self.kappa if self.kappa < 0 else self.kappa - 1

    @property
    def j(self):
        return abs(self.kappa) - 0.5

    @property
    def printed_n(self):
        """Radial index as printed in the tables.

        For p-spin partners with kappa > 0 the printed index is one less
        than the index entering the energy equation.
        """
        if self.symmetry is Symmetry.PSPIN and self.kappa > 0:
            return self.n - 1
        return self.n

    @property
    def label(self):
        return spectroscopic_label(self)

    @classmethod
    def from_label(cls, label, symmetry="spin"):
        """Parse ``"1d5/2"`` or ``"1d_{5/2}"`` into quantum numbers."""
        symmetry = _symmetry(symmetry)
        match = re.fullmatch(r"\s*(\d+)([a-z])_?\{?(\d+)/2\}?\s*", label)
        if not match:
            raise DomainError(f"cannot parse state label {label!r}")
        printed, letter, two_j = int(match[1]), match[2], int(match[3])
        l = _letter_index(letter)
        if two_j == 2 * l + 1:
            kappa = -(l + 1)
        elif two_j == 2 * l - 1 and l > 0:
            kappa = l
        else:
            raise DomainError(f"j={two_j}/2 incompatible with l={l} in {label!r}")
        n = printed + 1 if symmetry is Symmetry.PSPIN and kappa > 0 else printed
        return cls(n, kappa, symmetry)


def _letter(l):
    if l < len(ORBITAL_LETTERS):
        return ORBITAL_LETTERS[l]
    return chr(ord("j") + l - len(ORBITAL_LETTERS))


def _letter_index(letter):
    if letter in ORBITAL_LETTERS:
        return ORBITAL_LETTERS.index(letter)
    return len(ORBITAL_LETTERS) + ord(letter) - ord("j")


def spectroscopic_label(qn: QuantumNumbers, symmetry=None, style="tex"):
    """``"N l_{j}"`` label, e.g. ``0p_{3/2}`` (tex) or ``0p3/2`` (plain)."""
    if symmetry is not None and _symmetry(symmetry) is not qn.symmetry:
        qn = QuantumNumbers(qn.n, qn.kappa, symmetry)
    two_j = 2 * abs(qn.kappa) - 1
    letter = _letter(qn.l)
    if style == "plain":
        return f"{qn.printed_n}{letter}{two_j}/2"
    return f"{qn.printed_n}{letter}_{{{two_j}/2}}"


def coupling_omega(kappa, tensor_h, symmetry="spin"):
    """(kappa + H)(kappa + H + 1) for spin, (kappa + H)(kappa + H - 1) for p-spin."""
    k = kappa + tensor_h
    if _symmetry(symmetry) is Symmetry.SPIN:
        return k * (k + 1.0)
    return k * (k - 1.0)


def _variant_code(variant):
    if variant not in VARIANTS:
        raise DomainError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return kernels.DERIVATION if variant == "derivation" else kernels.PRINTED


def packed_params(qn, params, coeffs=None, variant="derivation", omega=None):
    """Kernel parameter vector for ``(qn, params)``."""
    coeffs = coeffs or params.coefficients
    if omega is None:
        omega = coupling_omega(qn.kappa, params.tensor_h, params.symmetry)
    return kernels.pack(
        qn.n, omega, params.m, params.v1, params.v2, params.c_sym,
        params.alpha, params.r_e, coeffs.D0, coeffs.D1, coeffs.D2,
        params.symmetry.sign, _variant_code(variant),
    )


def energy_residual(E, qn, params, coeffs=None, variant="derivation", omega=None):
    """Quantization residual; NaN where a radicand is negative.

    ``variant="derivation"`` returns eps + (n + delta + 1) - sqrt(beta1);
    ``variant="printed"`` evaluates the squared energy equation with the
    V1-weighted numerator.  ``omega`` overrides the coupling constant.
    """
    e = np.asarray(E, dtype=float)
    if np.any(np.isnan(e)):
        raise DomainError("energy is NaN")
    p = packed_params(qn, params, coeffs, variant, omega)
    out = kernels.residual_grid(np.atleast_1d(e).ravel(), p)
    if e.ndim == 0:
        return float(out[0])
    return out.reshape(e.shape)


@dataclass(frozen=True)
class LevelQuantities:
    epsilon: float
    beta1: float
    beta2: float
    exponent: float
    omega: float
    mass_factor: float

    @property
    def valid(self):
        return not math.isnan(self.epsilon)


def level_quantities(E, qn, params, coeffs=None, omega=None) -> LevelQuantities:
    """epsilon, beta1, beta2 and the exponent (delta or eta) at energy ``E``.

    ``mass_factor`` is m + E - C_s (spin) or m - E + C_ps (p-spin), the
    factor linking the two spinor components.
    """
    coeffs = coeffs or params.coefficients
    if omega is None:
        omega = coupling_omega(qn.kappa, params.tensor_h, params.symmetry)
    s = params.symmetry.sign
    m, al2, re2 = params.m, params.alpha**2, params.r_e**2
    a = E - s * m - params.c_sym
    et2 = a * (E + s * m)
    eps2 = (omega * coeffs.D0 / re2 - et2 + params.v2 * a) / (4.0 * al2)
    beta1 = (omega * (coeffs.D0 + coeffs.D1 + coeffs.D2) / re2 - et2 - params.v2 * a) / (4.0 * al2)
    beta2 = (omega * (2.0 * coeffs.D0 + coeffs.D1) / re2 - 2.0 * et2 - 4.0 * params.v1 * a) / (4.0 * al2)
    drad = 1.0 + (omega * coeffs.D2 / re2 + 4.0 * params.v1 * a) / al2
    nan = float("nan")
    if eps2 < 0.0 or beta1 < 0.0 or drad < 0.0:
        return LevelQuantities(nan, beta1, beta2, nan, omega, -s * a)
    return LevelQuantities(
        math.sqrt(eps2), beta1, beta2, 0.5 * (math.sqrt(drad) - 1.0), omega, -s * a
    )


def nu_input(E, qn, params, coeffs=None) -> NuInput:
    """Standard-form NU coefficients of the transformed radial equation."""
    q = level_quantities(E, qn, params, coeffs)
    return NuInput(1.0, 1.0, 1.0, 1.0, q.beta1, q.beta2, q.epsilon**2)


@dataclass(frozen=True)
class BoundState:
    E: float
    epsilon: float
    exponent: float
    omega: float
    beta1: float
    beta2: float
    coeffs: PekerisCoefficients
    qn: QuantumNumbers
    params: ModelParams
    variant: str = "derivation"
    norm: float | None = field(default=None, compare=False)

    @property
    def decay_rate(self):
        """Asymptotic decay constant 2 alpha epsilon of the major component."""
        return 2.0 * self.params.alpha * self.epsilon

    @property
    def mass_factor(self):
        p = self.params
        if p.symmetry is Symmetry.SPIN:
            return p.m + self.E - p.c_sym
        return p.m - self.E + p.c_sym

    @property
    def label(self):
        return self.qn.label


def default_window(params):
    c = abs(params.c_sym)
    return (-params.m - c - 10.0, params.m + c + 10.0)


def solve_levels(qn, params, window=None, tol=1e-10, variant="derivation", step=SCAN_STEP):
    """All roots of the energy residual in ``window`` that form bound states.

    The window is scanned on a uniform grid; each sign change between two
    valid neighbours is refined by bisection.  Roots are kept when
    epsilon > 0, the exponent (delta or eta) is > 0, and the factor
    coupling the two components does not vanish.
    """
    qn = QuantumNumbers(qn.n, qn.kappa, params.symmetry)
    lo, hi = default_window(params) if window is None else window
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise DomainError(f"invalid window {window!r}")
    if not (tol > 0 and step > 0):
        raise DomainError("tol and step must be positive")
    coeffs = params.coefficients
    p = packed_params(qn, params, coeffs, variant)
    count = int(math.ceil((hi - lo) / step)) + 1
    grid = np.linspace(lo, hi, count)
    res = kernels.residual_grid(grid, p)
    ok = np.isfinite(res[:-1]) & np.isfinite(res[1:])
    change = ok & ((res[:-1] < 0.0) != (res[1:] < 0.0))
    states = []
    for i in np.flatnonzero(change):
        root = kernels.bisect_residual(grid[i], grid[i + 1], p, tol)
        if math.isnan(root):
            continue
        q = level_quantities(root, qn, params, coeffs)
        if not (q.valid and q.epsilon > 0.0 and q.exponent > 0.0):
            continue
        if abs(q.mass_factor) <= 10.0 * tol:
            continue
        states.append(
            BoundState(root, q.epsilon, q.exponent, q.omega, q.beta1, q.beta2,
                       coeffs, qn, params, variant)
        )
    return sorted(states, key=lambda s: s.E)


def solve_level(qn, params, **kwargs):
    """Lowest level from :func:`solve_levels`; raises LevelNotFound if none."""
    states = solve_levels(qn, params, **kwargs)
    if not states:
        raise LevelNotFound(f"no bound state for n={qn.n}, kappa={qn.kappa}")
    return states[0]


# ---------------------------------------------------------------------------
# wavefunctions
# ---------------------------------------------------------------------------


def major_component(E, qn, params, r, coeffs=None, epsilon=None, exponent=None):
    """Unnormalized major component and its r-derivative.

    Spin: x^eps (1+x)^(delta+1) 2F1(-n, n+2(eps+delta+1); 2eps+1; -x).
    P-spin: x^eps (1+x)^(eta+1) P_n^(2eps, 2eta+1)(1+2x).
    Here x = exp(-2 alpha r) and the real branch of (-x)^eps is used.
    ``epsilon``/``exponent`` default to their values at ``E``.
    """
    if epsilon is None or exponent is None:
        q = level_quantities(E, qn, params, coeffs)
        epsilon, exponent = q.epsilon, q.exponent
    r = np.asarray(r, dtype=float)
    if math.isnan(epsilon) or math.isnan(exponent):
        nan = np.full(r.shape, np.nan)
        return nan, nan
    a = params.alpha
    n = qn.n
    x = np.exp(-2.0 * a * r)
    base = np.exp(-2.0 * a * epsilon * r) * (1.0 + x) ** (exponent + 1.0)
    if params.symmetry is Symmetry.SPIN:
        b = n + 2.0 * (epsilon + exponent + 1.0)
        c = 2.0 * epsilon + 1.0
        y = hyp2f1_terminating(n, b, c, -x)
        if n == 0:
            dy = np.zeros_like(r)
        else:
            dy = -2.0 * a * n * b * x / c * hyp2f1_terminating(n - 1, b + 1.0, c + 1.0, -x)
    else:
        jac = jacobi_p(n, 2.0 * epsilon, 2.0 * exponent + 1.0, 1.0 + 2.0 * x)
        y = jac.value
        dy = -4.0 * a * x * jac.derivative
    log_slope = -2.0 * a * epsilon - 2.0 * a * (exponent + 1.0) * x / (1.0 + x)
    value = base * y
    deriv = base * (log_slope * y + dy)
    return value, deriv


def _components(state, r, norm):
    p = state.params
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be positive")
    major, dmajor = major_component(
        state.E, state.qn, p, r, state.coeffs, state.epsilon, state.exponent
    )
    k = state.qn.kappa + p.tensor_h
    # first-order coupling equations with U(r) = -H/r
    if p.symmetry is Symmetry.SPIN:
        upper = major
        lower = (dmajor + k * major / r) / state.mass_factor
    else:
        lower = major
        upper = (dmajor - k * major / r) / state.mass_factor
    return norm * upper, norm * lower


def radial_components(state: BoundState, r):
    """Normalized (F, G) at radius/radii ``r`` (fm)."""
    if state.norm is None:
        raise StateError("state is not normalized; call normalize() first")
    return _components(state, r, state.norm)


def normalize(state: BoundState, grid: RadialGrid | None = None) -> BoundState:
    """Return a copy of ``state`` with int (F^2 + G^2) dr = 1.

    The integral runs from ``grid.r_min`` (F(0) is finite for the analytic
    form, so G carries a (kappa + H)/r term and the integral from 0 diverges
    unless kappa + H = 0).  The upper limit starts at ``grid.r_max`` and is
    extended until the integrand has dropped below 1e-14 of its peak.
    """
    if not (state.epsilon > 0 and state.exponent > 0):
        raise NotNormalizableError("epsilon and exponent must be positive")
    if grid is None:
        grid = RadialGrid.for_decay(state.decay_rate)

    def density(r):
        f, g = _components(state, r, 1.0)
        return f * f + g * g

    peak = float(np.max(density(grid.r)))
    if not (np.isfinite(peak) and peak > 0):
        raise NotNormalizableError("density is not finite on the grid")
    r_hi = grid.r_max
    while density(np.array([r_hi]))[0] > 1e-14 * peak:
        r_hi *= 2.0
        if r_hi > 1e6:
            raise NotNormalizableError("density does not decay")
    # decade pieces: G^2 can grow like 1/r^2 near the origin
    edges = [grid.r_min]
    while edges[-1] * 10.0 < r_hi:
        edges.append(edges[-1] * 10.0)
    edges.append(r_hi)
    total = sum(integrate(density, a, b, rel_tol=1e-12) for a, b in zip(edges[:-1], edges[1:]))
    if not (np.isfinite(total) and total > 0):
        raise NotNormalizableError(f"norm integral is {total}")
    return replace(state, norm=1.0 / math.sqrt(total))
