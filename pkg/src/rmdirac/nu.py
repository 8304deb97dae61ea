"""Parametric Nikiforov-Uvarov engine.

Handles any equation of the form

    psi'' + (c1 - c2 s) / (s (c3 - c4 s)) psi'
          + (-A s^2 + B s - C) / (s^2 (c3 - c4 s)^2) psi = 0.

A parameter point without real square roots is reported through
``NuDerived.valid`` and NaN-valued results rather than exceptions, because
energy scans probe such points routinely.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotNormalizableError
from .specfun import jacobi_p, laguerre

__all__ = [
    "NuDerived",
    "NuDiagnostics",
    "NuInput",
    "WavefunctionForm",
    "assemble_wavefunction",
    "derive_constants",
    "nu_diagnostics",
    "quantization_residual",
]

_NAN = float("nan")


@dataclass(frozen=True)
class NuInput:
    c1: float
    c2: float
    c3: float
    c4: float
    A: float
    B: float
    C: float


@dataclass(frozen=True)
class NuDerived:
    c5: float
    c6: float
    c7: float
    c8: float
    c9: float
    c10: float
    c11: float
    c12: float
    c13: float
    c14: float
    c15: float
    c16: float

    @property
    def valid(self):
        """True when c9 and c10 admit real square roots."""
        return self.c9 >= 0.0 and self.c10 >= 0.0


@dataclass(frozen=True)
class NuDiagnostics:
    pi_const: float
    pi_slope: float
    k: float
    tau_const: float
    tau_slope: float
    tau_prime: float

    @property
    def valid(self):
        return self.tau_prime < 0.0


def derive_constants(inp: NuInput) -> NuDerived:
    c1, c2, c3, c4 = inp.c1, inp.c2, inp.c3, inp.c4
    if c3 == 0.0:
        raise DomainError("c3 must be nonzero")
    c5 = 0.5 * (c3 - c1)
    c6 = 0.5 * (c2 - 2.0 * c4)
    c7 = c6 * c6 + inp.A
    # standard parametric form; a 2 c3 c6 reading contradicts c8 = -B for c5 = 0
    c8 = 2.0 * c5 * c6 - inp.B
    c9 = c5 * c5 + inp.C
    c10 = c4 * (c3 * c8 + c4 * c9) + c3 * c3 * c7
    if c9 < 0.0 or c10 < 0.0:
        return NuDerived(c5, c6, c7, c8, c9, c10, *([_NAN] * 6))
    r9 = math.sqrt(c9)
    r10 = math.sqrt(c10)
    c11 = 2.0 * r9 / c3
    c13 = (c5 + r9) / c3
    c15 = 2.0 * r10 / c3
    c16 = (r10 - c4 * c5 - c3 * c6) / c3
    if c4 != 0.0:
        c12 = 2.0 * r10 / (c3 * c4)
        c14 = (r10 - c4 * c5 - c3 * c6) / (c3 * c4)
    else:
        c12 = c14 = _NAN
    return NuDerived(c5, c6, c7, c8, c9, c10, c11, c12, c13, c14, c15, c16)


def quantization_residual(inp: NuInput, derived: NuDerived, n: int) -> float:
    """Left side of the NU energy condition; zero at an eigenvalue.

    Returns NaN when the radicands are negative.
    """
    if not derived.valid:
        return _NAN
    c2, c3, c4 = inp.c2, inp.c3, inp.c4
    d = derived
    r9 = math.sqrt(d.c9)
    r10 = math.sqrt(d.c10)
    return (
        c2 * n
        - (2 * n + 1) * d.c6
        + (2 * n + 1) * (r10 + c4 * r9) / c3
        + n * (n - 1) * c4
        + (c3 * d.c8 + 2.0 * c4 * d.c9 + 2.0 * math.sqrt(d.c9 * d.c10)) / c3**2
    )


def nu_diagnostics(inp: NuInput, derived: NuDerived) -> NuDiagnostics:
    if not derived.valid:
        return NuDiagnostics(*([_NAN] * 6))
    c3, c4 = inp.c3, inp.c4
    d = derived
    r9 = math.sqrt(d.c9)
    r10 = math.sqrt(d.c10)
    pi_const = d.c5 + r9
    pi_slope = -(c4 * r9 + r10 - c3 * d.c6) / c3
    k = -(c3 * d.c8 + 2.0 * c4 * d.c9 + 2.0 * math.sqrt(d.c9 * d.c10)) / c3
    tau_const = c3 + 2.0 * r9
    tau_slope = -2.0 * (c3 * c4 + c4 * r9 + r10) / c3
    return NuDiagnostics(pi_const, pi_slope, k, tau_const, tau_slope, tau_slope)


@dataclass(frozen=True)
class WavefunctionForm:
    """Unnormalized psi(s) = s^c13 (c3 - c4 s)^c14 P_n^(c11,c12)(c3 - 2 c4 s).

    With c4 == 0 the Laguerre limit s^c13 exp(-c16 s / c3) L_n^c11(c15 s) is
    used instead.
    """

    n: int
    c3: float
    c4: float
    c11: float
    c12: float
    c13: float
    c14: float
    c15: float
    c16: float

    @property
    def laguerre_branch(self):
        return self.c4 == 0.0

    def weight(self, s):
        """rho(s) = s^c11 (c3 - c4 s)^c12 (Jacobi branch only)."""
        s = np.asarray(s, dtype=float)
        return s**self.c11 * (self.c3 - self.c4 * s) ** self.c12

    def phi(self, s):
        s = np.asarray(s, dtype=float)
        if self.laguerre_branch:
            return s**self.c13 * np.exp(-self.c16 * s / self.c3)
        # log1p keeps (1 - c4 s / c3)^c14 accurate for small c4 and large c14
        return (
            s**self.c13
            * self.c3**self.c14
            * np.exp(self.c14 * np.log1p(-self.c4 * s / self.c3))
        )

    def polynomial(self, s):
        s = np.asarray(s, dtype=float)
        if self.laguerre_branch:
            return laguerre(self.n, self.c11, self.c15 * s)
        return jacobi_p(self.n, self.c11, self.c12, self.c3 - 2.0 * self.c4 * s).value

    def __call__(self, s):
        return self.phi(s) * self.polynomial(s)


def assemble_wavefunction(inp: NuInput, derived: NuDerived, n: int) -> WavefunctionForm:
    """Build the unnormalized NU eigenfunction for radial index ``n``.

    Raises
    ------
    NotNormalizableError
        If the exponent conditions (c13 > 0, c14 > 0, c11 > -1, c12 > -1)
        fail, or the radicands are negative.
    """
    d = derived
    if not d.valid:
        raise NotNormalizableError("no real NU solution at this parameter point")
    if inp.c4 == 0.0:
        ok = d.c13 > 0.0 and d.c16 > 0.0 and d.c11 > -1.0
    else:
        ok = d.c13 > 0.0 and d.c14 > 0.0 and d.c11 > -1.0 and d.c12 > -1.0
    if not ok:
        raise NotNormalizableError(
            f"exponent conditions violated: c11={d.c11}, c12={d.c12}, "
            f"c13={d.c13}, c14={d.c14}"
        )
    return WavefunctionForm(
        int(n), inp.c3, inp.c4, d.c11, d.c12, d.c13, d.c14, d.c15, d.c16
    )
