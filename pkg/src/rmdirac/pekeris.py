"""Pekeris-type approximation of the centrifugal term 1/r^2.

With u(r) = exp(-2 alpha r) / (1 + exp(-2 alpha r)) the approximant is

    1/r^2  ~  (D0 + D1 u + D2 u^2) / r_e^2,

with D0, D1, D2 fixed by matching value, slope and curvature at r = r_e.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = ["PekerisCoefficients", "approx_inverse_r2", "pekeris_coefficients", "u_of_r"]


def u_of_r(r, alpha):
    """u(r) = 1 / (1 + exp(2 alpha r)), evaluated without overflow."""
    x = np.exp(-2.0 * alpha * np.asarray(r, dtype=float))
    return x / (1.0 + x)


@dataclass(frozen=True)
class PekerisCoefficients:
    D0: float
    D1: float
    D2: float
    alpha: float
    r_e: float

    @property
    def u_e(self):
        return float(u_of_r(self.r_e, self.alpha))

    def matching_residuals(self):
        """Mismatch of value, first and second derivative at r_e.

        Each entry is scaled by the corresponding derivative of 1/r^2 so
        the three numbers are dimensionless.
        """
        u = self.u_e
        a = self.alpha
        re = self.r_e
        du = -2.0 * a * u * (1.0 - u)
        d2u = 4.0 * a * a * u * (1.0 - u) * (1.0 - 2.0 * u)
        g0 = (self.D0 + self.D1 * u + self.D2 * u * u) / re**2
        g1 = (self.D1 + 2.0 * self.D2 * u) * du / re**2
        g2 = (2.0 * self.D2 * du * du + (self.D1 + 2.0 * self.D2 * u) * d2u) / re**2
        f0, f1, f2 = 1.0 / re**2, -2.0 / re**3, 6.0 / re**4
        return ((g0 - f0) / f0, (g1 - f1) / f1, (g2 - f2) / f2)


def pekeris_coefficients(alpha, r_e):
    """Second-order Taylor matching of the quadratic-in-u form at ``r_e``."""
    if not (alpha > 0 and r_e > 0):
        raise DomainError(f"alpha and r_e must be positive, got {alpha}, {r_e}")
    c = 2.0 * alpha * r_e
    u = float(u_of_r(r_e, alpha))
    w = u * (1.0 - u)
    d2 = (3.0 - c * (1.0 - 2.0 * u)) / (c * c * w * w)
    d1 = 2.0 / (c * w) - 2.0 * d2 * u
    d0 = 1.0 - d1 * u - d2 * u * u
    return PekerisCoefficients(d0, d1, d2, float(alpha), float(r_e))


def approx_inverse_r2(r, coeffs):
    """Evaluate (D0 + D1 u + D2 u^2) / r_e^2 at ``r`` (scalar or array)."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise DomainError("r must be positive")
    u = u_of_r(r_arr, coeffs.alpha)
    out = (coeffs.D0 + coeffs.D1 * u + coeffs.D2 * u * u) / coeffs.r_e**2
    return float(out) if out.ndim == 0 else out
