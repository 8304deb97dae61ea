"""Dirac bound states of the Rosen-Morse potential with a Coulomb-like tensor
term under exact spin and pseudospin symmetry.

The analytic spectrum follows the parametric Nikiforov-Uvarov reduction with a
Pekeris-type approximation of the centrifugal term; :mod:`rmdirac.oracle`
provides independent numerical checks.
"""

from .errors import (
    AccuracyError,
    DomainError,
    LevelNotFound,
    NotNormalizableError,
    StateError,
)
from .pekeris import PekerisCoefficients, approx_inverse_r2, pekeris_coefficients
from .dirac import (
    BoundState,
    ModelParams,
    QuantumNumbers,
    Symmetry,
    coupling_omega,
    energy_residual,
    normalize,
    radial_components,
    solve_levels,
    spectroscopic_label,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "BoundState",
    "DomainError",
    "LevelNotFound",
    "ModelParams",
    "NotNormalizableError",
    "PekerisCoefficients",
    "QuantumNumbers",
    "StateError",
    "Symmetry",
    "approx_inverse_r2",
    "coupling_omega",
    "energy_residual",
    "normalize",
    "pekeris_coefficients",
    "radial_components",
    "solve_levels",
    "spectroscopic_label",
]
