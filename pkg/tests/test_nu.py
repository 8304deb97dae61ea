import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from rmdirac import QuantumNumbers, solve_levels
from rmdirac.dirac import level_quantities, nu_input
from rmdirac.errors import DomainError, NotNormalizableError
from rmdirac.nu import (
    NuInput,
    assemble_wavefunction,
    derive_constants,
    nu_diagnostics,
    quantization_residual,
)

from conftest import PSPIN_DEMO, SPIN_DEMO


def rm_input(beta1, beta2, eps):
    return NuInput(1.0, 1.0, 1.0, 1.0, beta1, beta2, eps * eps)


def test_rm_mapping_constants():
    d = derive_constants(rm_input(3.0, 1.5, 0.7))
    assert (d.c5, d.c6, d.c7, d.c8, d.c9) == pytest.approx((0.0, -0.5, 3.25, -1.5, 0.49))


def test_hand_evaluated_c10():
    assert derive_constants(NuInput(1, 1, 1, 1, 2.0, 1.0, 0.25)).c10 == pytest.approx(1.5)


def test_zero_potential():
    inp = NuInput(1, 1, 1, 1, 0.0, 0.0, 0.0)
    d = derive_constants(inp)
    assert d.c7 == pytest.approx(0.25) and d.c9 == 0.0 and d.c10 == pytest.approx(0.25)
    assert quantization_residual(inp, d, 0) == pytest.approx(1.0)


def test_invalid_marker_and_c3_domain():
    d = derive_constants(NuInput(1, 1, 1, 1, 0.0, 0.0, -1.0))
    assert not d.valid and math.isnan(d.c11)
    assert math.isnan(quantization_residual(NuInput(1, 1, 1, 1, 0, 0, -1.0), d, 0))
    with pytest.raises(DomainError):
        derive_constants(NuInput(1, 1, 0, 1, 0, 0, 0))


@settings(max_examples=200, deadline=None)
@given(beta1=st.floats(0, 50), beta2=st.floats(-50, 50), eps=st.floats(0, 10), n=st.integers(0, 6))
def test_printed_condition_reduces_to_simplified(beta1, beta2, eps, n):
    """With c1..c4 = 1 the printed condition equals (eps + n + delta + 1)^2 - beta1."""
    inp = rm_input(beta1, beta2, eps)
    d = derive_constants(inp)
    rad = 1.0 + 4.0 * (beta1 - beta2 + eps * eps)  # (2 delta + 1)^2
    assume(rad >= 0)
    delta = 0.5 * (math.sqrt(rad) - 1.0)
    assert d.c10 == pytest.approx((delta + 0.5) ** 2, rel=1e-12, abs=1e-12)
    expected = (eps + n + delta + 1.0) ** 2 - beta1
    got = quantization_residual(inp, d, n)
    assert got == pytest.approx(expected, rel=1e-10, abs=1e-9 * (1 + beta1 + (n + eps + delta) ** 2))


def test_residual_example_root():
    # n = 0, delta = 0, eps = 1, beta1 = 4: delta = 0 needs beta2 = beta1 + eps^2
    inp = rm_input(4.0, 5.0, 1.0)
    assert quantization_residual(inp, derive_constants(inp), 0) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("params,n,kappa", [(SPIN_DEMO, 0, -2), (SPIN_DEMO, 2, -3), (PSPIN_DEMO, 0, 2)])
def test_diagnostics_at_solved_state(params, n, kappa):
    qn = QuantumNumbers(n, kappa, params.symmetry)
    state = solve_levels(qn, params)[0]
    inp = nu_input(state.E, qn, params)
    d = derive_constants(inp)
    diag = nu_diagnostics(inp, d)
    eps, delta = state.epsilon, state.exponent
    assert quantization_residual(inp, d, n) == pytest.approx(0.0, abs=1e-8)
    assert diag.tau_prime == pytest.approx(-(3 + 2 * eps + 2 * delta), rel=1e-12)
    assert diag.valid
    assert diag.pi_const == pytest.approx(eps, rel=1e-12)
    assert diag.pi_slope == pytest.approx(-(1 + eps + delta), rel=1e-12)
    assert diag.k == pytest.approx(state.beta2 - (2 * eps**2 + (2 * delta + 1) * eps), rel=1e-10, abs=1e-10)


def test_wavefunction_factors_rm_mapping():
    eps, beta1 = 0.8, 9.0
    beta2 = 7.0
    inp = rm_input(beta1, beta2, eps)
    d = derive_constants(inp)
    delta = math.sqrt(d.c10) - 0.5
    wf = assemble_wavefunction(inp, d, 2)
    z = np.array([0.1, 0.4, 0.7])
    assert wf.weight(z) == pytest.approx(z ** (2 * eps) * (1 - z) ** (2 * delta + 1), rel=1e-12)
    assert wf.phi(z) == pytest.approx(z**eps * (1 - z) ** (delta + 1), rel=1e-12)
    wf0 = assemble_wavefunction(inp, d, 0)
    assert wf0(z) == pytest.approx(wf0.phi(z), rel=1e-14)


def test_wavefunction_rejects_bad_exponents():
    inp = rm_input(0.0, 10.0, 0.0)  # c13 = 0
    with pytest.raises(NotNormalizableError):
        assemble_wavefunction(inp, derive_constants(inp), 0)


def test_laguerre_limit():
    base = dict(c1=1.0, c2=0.5, c3=1.0, A=2.0, B=1.0, C=0.3)
    lag = assemble_wavefunction(NuInput(c4=0.0, **base), derive_constants(NuInput(c4=0.0, **base)), 2)
    small = NuInput(c4=1e-6, **base)
    jac = assemble_wavefunction(small, derive_constants(small), 2)
    s = np.array([0.2, 0.5, 1.0])
    # Jacobi normalization differs by a constant; compare shapes
    ratio = jac(s) / lag(s)
    assert np.ptp(ratio) / abs(ratio[0]) < 1e-4


def test_level_quantities_match_nu():
    qn = QuantumNumbers(1, -2)
    state = solve_levels(qn, SPIN_DEMO)[0]
    q = level_quantities(state.E, qn, SPIN_DEMO)
    d = derive_constants(nu_input(state.E, qn, SPIN_DEMO))
    assert math.sqrt(d.c10) - 0.5 == pytest.approx(q.exponent, rel=1e-12)
    assert math.sqrt(d.c9) == pytest.approx(q.epsilon, rel=1e-12)
