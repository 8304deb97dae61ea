"""Reference energies (fm^-1) for the default parameter set.

Entries carry the index ``n`` that enters the energy equation.  For
pseudospin states with kappa > 0 the printed radial label is n - 1, which
the label reproduces through :attr:`QuantumNumbers.printed_n`.
"""

from dataclasses import dataclass

from .dirac import QuantumNumbers, Symmetry

__all__ = ["TableEntry", "TABLE_PSPIN", "TABLE_SPIN", "TABLES", "lookup"]


@dataclass(frozen=True)
class TableEntry:
    symmetry: Symmetry
    n: int
    kappa: int
    E_h: float   # at H = 0.5
    E_h0: float  # at H = 0

    @property
    def qn(self):
        return QuantumNumbers(self.n, self.kappa, self.symmetry)

    @property
    def label(self):
        return self.qn.label


_S = Symmetry.SPIN
_P = Symmetry.PSPIN

TABLE_SPIN = (
    TableEntry(_S, 0, -2, 0.1483955852, 0.3935828782),
    TableEntry(_S, 0, 1, 0.6582373104, 0.3935828782),
    TableEntry(_S, 0, -3, 0.6582373104, 0.9333946490),
    TableEntry(_S, 0, 2, 1.214682872, 0.9333946490),
    TableEntry(_S, 0, -4, 1.214682872, 1.499799551),
    TableEntry(_S, 0, 3, 1.787442858, 1.499799551),
    TableEntry(_S, 0, -5, 1.787442858, 2.076830625),
    TableEntry(_S, 0, 4, 2.367468347, 2.076830625),
    TableEntry(_S, 1, -2, 0.2663841239, 0.5510806494),
    TableEntry(_S, 1, 1, 0.8381866907, 0.5510806494),
    TableEntry(_S, 1, -3, 0.8381866907, 1.127479271),
    TableEntry(_S, 1, 2, 1.418299684, 1.127479271),
    TableEntry(_S, 1, -4, 1.418299684, 1.710188317),
    TableEntry(_S, 1, 3, 2.002843683, 1.710188317),
    TableEntry(_S, 1, -5, 2.002843683, 2.296064965),
    TableEntry(_S, 1, 4, 2.589714652, 2.296064965),
)

TABLE_PSPIN = (
    TableEntry(_P, 1, -1, -1.903134794, -1.738772757),
    TableEntry(_P, 1, 2, -1.538608678, -1.738772757),
    TableEntry(_P, 1, -2, -1.538608678, -1.313563183),
    TableEntry(_P, 1, 3, -1.071543282, -1.313563183),
    TableEntry(_P, 1, -3, -1.071543282, -0.8177171059),
    TableEntry(_P, 1, 4, -0.5554514514, -0.8177171059),
    TableEntry(_P, 1, -4, -0.5554514514, -0.2869876340),
    TableEntry(_P, 1, 5, -0.01385847616, -0.2869876340),
    TableEntry(_P, 2, -1, -1.921760586, -1.745387730),
    TableEntry(_P, 2, 2, -1.521903111, -1.745387730),
    TableEntry(_P, 2, -2, -1.521903111, -1.273143731),
    TableEntry(_P, 2, 3, -1.01005856, -1.273143731),
    TableEntry(_P, 2, -3, -1.010058564, -0.7382341146),
    TableEntry(_P, 2, 4, -0.4607283791, -0.7382341146),
    TableEntry(_P, 2, -4, -0.4607283791, -0.1793345097),
    TableEntry(_P, 2, 5, 0.1048326489, -0.1793345097),
)

TABLES = {Symmetry.SPIN: TABLE_SPIN, Symmetry.PSPIN: TABLE_PSPIN}


def lookup(qn: QuantumNumbers):
    """Table entry for ``qn`` or None."""
    for entry in TABLES[qn.symmetry]:
        if entry.n == qn.n and entry.kappa == qn.kappa:
            return entry
    return None
