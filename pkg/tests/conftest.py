"""Shared parameter sets.

The reference parameter set admits no bound states under the analytic
energy equation (see the acceptance report), so the machinery is exercised
on demonstration sets that do carry levels.
"""

import pytest

from rmdirac import ModelParams, QuantumNumbers, solve_levels

SPIN_DEMO = ModelParams(symmetry="spin", v1=-13.54, v2=-0.51, alpha=0.25, c_sym=2.56, r_e=2.39)
PSPIN_DEMO = ModelParams(symmetry="pspin", v1=-4.36, v2=-5.74, alpha=0.25, c_sym=-6.76, r_e=2.71)
# kappa + H = 0: no centrifugal coupling, G has no 1/r term
SPIN_OMEGA0 = ModelParams(symmetry="spin", v1=-1.08, v2=3.57, alpha=0.25, c_sym=6.21,
                          r_e=2.25, tensor_h=1.0)


def lowest(params, n, kappa, **kwargs):
    states = solve_levels(QuantumNumbers(n, kappa, params.symmetry), params, **kwargs)
    assert states, f"no level for n={n}, kappa={kappa}"
    return states[0]


@pytest.fixture(scope="session")
def spin_demo():
    return SPIN_DEMO


@pytest.fixture(scope="session")
def pspin_demo():
    return PSPIN_DEMO
