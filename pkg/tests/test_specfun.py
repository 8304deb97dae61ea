import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rmdirac.errors import AccuracyError, DomainError
from rmdirac.specfun import hyp2f1_terminating, integrate, jacobi_p, laguerre


def jacobi_series(n, a, b, x):
    """P_n^(a,b)(x) = (a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; (1-x)/2), term by term."""
    s = mpmath.mpf(1 - x) / 2
    total = mpmath.mpf(0)
    for k in range(n + 1):
        total += (mpmath.rf(-n, k) * mpmath.rf(n + a + b + 1, k)
                  / (mpmath.rf(a + 1, k) * mpmath.factorial(k))) * s**k
    return float(mpmath.rf(a + 1, n) / mpmath.factorial(n) * total)


def test_jacobi_trivial_values():
    assert jacobi_p(0, 2.3, 0.7, 0.4).value == 1.0
    assert jacobi_p(0, 2.3, 0.7, 0.4).derivative == 0.0
    assert jacobi_p(1, 1.0, 1.0, 0.0).value == 0.0


def test_jacobi_matches_series():
    assert jacobi_p(3, 0.5, 1.5, 0.2).value == pytest.approx(jacobi_series(3, 0.5, 1.5, 0.2), rel=1e-13)


def test_jacobi_matches_mpmath_outside_interval():
    # wavefunctions evaluate at 1 + 2x in (1, 3]
    for x in (1.3, 2.0, 2.9):
        ref = float(mpmath.jacobi(4, 1.7, 3.2, x))
        assert jacobi_p(4, 1.7, 3.2, x).value == pytest.approx(ref, rel=1e-12)


def test_jacobi_derivative_against_mpmath():
    for x in (-0.7, 0.1, 1.8):
        ref = float(mpmath.diff(lambda t: mpmath.jacobi(5, 0.4, 2.5, t), x))
        assert jacobi_p(5, 0.4, 2.5, x).derivative == pytest.approx(ref, rel=1e-10)


def test_jacobi_vectorized():
    xs = np.linspace(-1, 1, 7)
    out = jacobi_p(3, 0.2, 0.9, xs)
    assert out.value.shape == xs.shape
    assert out.value[2] == pytest.approx(jacobi_p(3, 0.2, 0.9, xs[2]).value, rel=1e-15)


@pytest.mark.parametrize("a,b", [(-1.0, 0.0), (0.0, -1.5)])
def test_jacobi_domain(a, b):
    with pytest.raises(DomainError):
        jacobi_p(2, a, b, 0.1)


@settings(max_examples=200, deadline=None)
@given(
    n=st.integers(0, 10),
    a=st.floats(-0.9, 5.0),
    b=st.floats(-0.9, 5.0),
    x=st.floats(-1.0, 1.0),
)
def test_jacobi_agrees_with_hypergeometric(n, a, b, x):
    lhs = jacobi_p(n, a, b, x).value
    pref = math.gamma(a + 1 + n) / (math.gamma(a + 1) * math.factorial(n))
    s = (1 - x) / 2
    rhs = pref * hyp2f1_terminating(n, n + a + b + 1, a + 1, s)
    # the series cancels near x = -1; measure error against its term magnitude
    magnitude = pref * hyp2f1_terminating(n, n + a + b + 1, a + 1, -s) if n + a + b + 1 > 0 else abs(rhs)
    assert abs(lhs - rhs) <= 1e-12 * max(abs(rhs), abs(magnitude), 1e-300)


@settings(max_examples=100, deadline=None)
@given(n=st.integers(0, 10), a=st.floats(-0.9, 5.0), b=st.floats(-0.9, 5.0))
def test_jacobi_at_one_is_binomial(n, a, b):
    expected = math.gamma(n + a + 1) / (math.gamma(n + 1) * math.gamma(a + 1))
    assert jacobi_p(n, a, b, 1.0).value == pytest.approx(expected, rel=1e-12)


def test_hyp2f1_trivial():
    assert hyp2f1_terminating(0, 3.1, 1.2, -0.5) == 1.0
    assert hyp2f1_terminating(1, 2.0, 4.0, 0.5) == pytest.approx(0.75, abs=1e-15)


def test_hyp2f1_identity_with_jacobi():
    n, b, c, x = 2, 5.0, 3.0, 0.1
    # 2F1(-n, b; c; s) = n! / (c)_n * P_n^(c-1, b-c-n)(1 - 2s)
    a, beta = c - 1, b - c - n
    pref = math.factorial(n) / float(mpmath.rf(c, n))
    assert hyp2f1_terminating(n, b, c, x) == pytest.approx(
        pref * jacobi_p(n, a, beta, 1 - 2 * x).value, rel=1e-13
    )


def test_hyp2f1_against_mpmath_negative_argument():
    for x in (-0.2, -0.9, -1.0):
        ref = float(mpmath.hyp2f1(-4, 9.3, 3.7, x))
        assert hyp2f1_terminating(4, 9.3, 3.7, x) == pytest.approx(ref, rel=1e-13)


def test_hyp2f1_pole_before_termination():
    with pytest.raises(DomainError):
        hyp2f1_terminating(3, 1.0, -1.0, 0.2)
    # pole beyond the last term is harmless
    assert math.isfinite(hyp2f1_terminating(1, 1.0, -1.0, 0.2))


@settings(max_examples=100, deadline=None)
@given(n=st.integers(0, 8), b=st.floats(-5, 5), c=st.floats(0.1, 6), x=st.floats(-1, 1))
def test_hyp2f1_is_polynomial(n, b, c, x):
    coeffs = [float(mpmath.rf(-n, k) * mpmath.rf(b, k) / (mpmath.rf(c, k) * mpmath.factorial(k)))
              for k in range(n + 1)]
    horner = 0.0
    for coef in reversed(coeffs):
        horner = horner * x + coef
    scale = sum(abs(coef) for coef in coeffs)
    assert abs(hyp2f1_terminating(n, b, c, x) - horner) <= 1e-14 * max(1.0, scale)


def test_laguerre_values():
    assert laguerre(0, 0.3, 2.0) == 1.0
    assert laguerre(1, 0.5, 1.0) == pytest.approx(0.5, abs=1e-15)
    assert laguerre(4, 0.0, 0.0) == pytest.approx(1.0, abs=1e-15)
    assert laguerre(5, 1.3, 2.2) == pytest.approx(float(mpmath.laguerre(5, 1.3, 2.2)), rel=1e-13)
    with pytest.raises(DomainError):
        laguerre(2, -1.0, 0.5)


def test_integrate_examples():
    assert integrate(lambda x: x**2, 0.0, 1.0, 1e-10) == pytest.approx(1 / 3, rel=1e-12)
    assert integrate(lambda x: np.exp(-x), 0.0, 60.0, 1e-10) == pytest.approx(1.0, abs=1e-10)
    assert integrate(lambda x: np.sin(x) ** 2, 0.0, math.pi, 1e-10) == pytest.approx(math.pi / 2, rel=1e-10)


@settings(max_examples=50, deadline=None)
@given(coeffs=st.lists(st.floats(-10, 10), min_size=1, max_size=30))
def test_integrate_exact_on_polynomials(coeffs):
    poly = np.polynomial.Polynomial(coeffs)
    exact = poly.integ()(2.0) - poly.integ()(-1.0)
    got = integrate(poly, -1.0, 2.0, 1e-10)
    assert abs(got - exact) <= 1e-12 * max(1.0, sum(abs(c) * 2.0**i for i, c in enumerate(coeffs)))


def test_integrate_deterministic():
    f = lambda x: np.exp(-x) * np.cos(3 * x)
    assert integrate(f, 0.0, 10.0) == integrate(f, 0.0, 10.0)


def test_integrate_reports_failure():
    with pytest.raises(AccuracyError) as err:
        integrate(lambda x: np.sin(1.0 / x), 1e-6, 1.0, rel_tol=1e-14, max_panels=20)
    assert err.value.estimate is not None


def test_integrate_bad_interval():
    with pytest.raises(DomainError):
        integrate(lambda x: x, 1.0, 0.0)
