import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from rmdirac.errors import DomainError
from rmdirac.pekeris import approx_inverse_r2, pekeris_coefficients, u_of_r

ALPHA, RE = 0.25, 2.197224577


def brute_force(alpha, r_e):
    """Solve the 3x3 value/slope/curvature matching system directly."""
    u = 1.0 / (1.0 + math.exp(2 * alpha * r_e))
    du = -2 * alpha * u * (1 - u)
    d2u = 4 * alpha**2 * u * (1 - u) * (1 - 2 * u)
    # rows: g, g', g'' in units of 1/r_e^2; unknowns D0, D1, D2
    a = np.array([
        [1.0, u, u * u],
        [0.0, du, 2 * u * du],
        [0.0, d2u, 2 * du * du + 2 * u * d2u],
    ])
    rhs = np.array([1.0, -2.0 / r_e, 6.0 / r_e**2])
    return np.linalg.solve(a, rhs)


def test_default_coefficients():
    c = pekeris_coefficients(ALPHA, RE)
    assert c.u_e == pytest.approx(0.25, abs=1e-10)
    assert (c.D0, c.D1, c.D2) == pytest.approx(tuple(brute_force(ALPHA, RE)), rel=1e-10)
    assert c.D0 == pytest.approx(2.182, abs=5e-4)
    assert c.D1 == pytest.approx(-19.17, abs=5e-3)
    assert c.D2 == pytest.approx(57.76, abs=5e-3)


def test_matching_residuals_default():
    assert max(abs(x) for x in pekeris_coefficients(ALPHA, RE).matching_residuals()) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(alpha=st.floats(0.05, 2.0), r_e=st.floats(0.3, 6.0))
def test_closed_form_matches_linear_solve(alpha, r_e):
    c = pekeris_coefficients(alpha, r_e)
    ref = brute_force(alpha, r_e)
    scale = np.max(np.abs(ref))
    assert np.max(np.abs(np.array([c.D0, c.D1, c.D2]) - ref)) <= 1e-8 * scale
    u = c.u_e
    assert c.D0 + c.D1 * u + c.D2 * u * u == pytest.approx(1.0, abs=1e-12 * scale)


def test_approximant_values():
    c = pekeris_coefficients(ALPHA, RE)
    assert approx_inverse_r2(RE, c) == pytest.approx(1 / RE**2, rel=1e-12)
    assert approx_inverse_r2(1e4, c) == pytest.approx(c.D0 / RE**2, rel=1e-14)
    for r in (RE - 0.5, RE + 0.5):
        dev = approx_inverse_r2(r, c) * r * r - 1.0
        assert 0 < abs(dev) < 0.05  # third-order mismatch only


def test_approximant_array_and_domain():
    c = pekeris_coefficients(ALPHA, RE)
    out = approx_inverse_r2(np.array([1.0, 2.0]), c)
    assert out.shape == (2,)
    with pytest.raises(DomainError):
        approx_inverse_r2(0.0, c)
    with pytest.raises(DomainError):
        pekeris_coefficients(-0.1, 1.0)


def test_u_of_r_no_overflow():
    assert u_of_r(1e5, 1.0) == 0.0
    assert u_of_r(0.0, 1.0) == 0.5


def test_z_polynomial_identity():
    """(1/r_e^2)[D0 (1-z)^2 - D1 z (1-z) + D2 z^2] has coefficients D0, -(2D0+D1), D0+D1+D2."""
    z, d0, d1, d2 = sympy.symbols("z D0 D1 D2")
    poly = sympy.Poly(sympy.expand(d0 * (1 - z) ** 2 - d1 * z * (1 - z) + d2 * z**2), z)
    assert poly.coeff_monomial(1) == d0
    assert sympy.simplify(poly.coeff_monomial(z) + (2 * d0 + d1)) == 0
    assert sympy.simplify(poly.coeff_monomial(z**2) - (d0 + d1 + d2)) == 0
    # and with u = -z / (1 - z) the quadratic-in-u form times (1-z)^2 is that polynomial
    u = -z / (1 - z)
    lhs = sympy.simplify((d0 + d1 * u + d2 * u**2) * (1 - z) ** 2)
    assert sympy.simplify(lhs - poly.as_expr()) == 0
