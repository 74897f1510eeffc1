"""
Binary cross-entropy and its exponential / frequency-domain forms
"""
import math
from dataclasses import dataclass

import numpy as np

from spectral.errors import DomainError, SingularityError
from spectral.signals import ensure_finite


@dataclass(frozen=True)
class BceInput:
    """Binary label y in {0, 1} and probability p strictly inside (0, 1)"""

    y: float
    p: float

    def __post_init__(self):
        ensure_finite(np.array([self.y, self.p], dtype=float), 'bce input')
        if self.y not in (0, 1):
            raise DomainError(f"label must be 0 or 1, got {self.y}")
        if not 0.0 < self.p < 1.0:
            raise DomainError(f"probability must lie in (0, 1), got {self.p}")

    @property
    def exp_weight(self):
        """p^{-y} (1 - p)^{y - 1}"""
        return self.p ** (-self.y) * (1.0 - self.p) ** (self.y - 1)


def bce(inp):
    """-(y log p + (1 - y) log(1 - p)), natural log"""
    return -(inp.y * math.log(inp.p) + (1 - inp.y) * math.log(1.0 - inp.p))


def bce_exp_identity_check(inp):
    """(exp(bce), p^{-y} (1 - p)^{y - 1}) for side-by-side comparison"""
    return math.exp(bce(inp)), inp.exp_weight


def bce_ft_antiderivative(x, omega, inp):
    """
    p^{-y} (1 - p)^{y - 1} e^{-i omega x} / (-i omega)

    x-derivative is p^{-y} (1 - p)^{y - 1} e^{-i omega x}; p is constant in x.

    Raises:
        SingularityError: omega == 0
    """
    ensure_finite(np.array([x, omega], dtype=float), 'argument')
    if omega == 0:
        raise SingularityError("antiderivative is singular at omega = 0")
    return complex(inp.exp_weight * np.exp(-1j * omega * x) / (-1j * omega))
