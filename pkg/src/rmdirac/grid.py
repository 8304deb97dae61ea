"""Uniform radial grids shared by normalization and the numerical oracle."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

R_MIN_DEFAULT = 1e-4
R_MAX_FLOOR = 40.0


@dataclass(frozen=True)
class RadialGrid:
    r_min: float = R_MIN_DEFAULT
    r_max: float = R_MAX_FLOOR
    points: int = 8000

    def __post_init__(self):
        if not 0.0 < self.r_min < self.r_max:
            raise DomainError(f"need 0 < r_min < r_max, got {self.r_min}, {self.r_max}")
        if self.points < 1000:
            raise DomainError(f"points={self.points} must be >= 1000")

    @property
    def r(self):
        return np.linspace(self.r_min, self.r_max, self.points)

    @property
    def spacing(self):
        return (self.r_max - self.r_min) / (self.points - 1)

    def refined(self, factor=2):
        """Same interval with the spacing divided by ``factor``."""
        return RadialGrid(self.r_min, self.r_max, factor * (self.points - 1) + 1)

    @classmethod
    def for_decay(cls, decay_rate, points=8000, r_min=R_MIN_DEFAULT):
        """Grid whose far end sits where exp(-decay_rate r) < 1e-12.

        ``decay_rate`` is the asymptotic exponent 2 alpha epsilon of the
        state, so r_max = max(40, 12 ln 10 / decay_rate).
        """
        if not decay_rate > 0:
            raise DomainError(f"decay rate must be positive, got {decay_rate}")
        r_max = max(R_MAX_FLOOR, 12.0 * math.log(10.0) / decay_rate)
        return cls(r_min, r_max, points)
