"""
Gauss hypergeometric function 2F1 by its power series

    2F1(a, b; c; z) = sum_n (a)_n (b)_n / (c)_n * z^n / n!

Only the series disc |z| < 1 is supported; no analytic continuation.
"""
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from config import SERIES_SETTINGS
from spectral.errors import ConvergenceError, DomainError
from spectral.signals import ensure_finite

logger = logging.getLogger('hypergeometric')


def _is_nonpositive_integer(value):
    return value.imag == 0 and value.real <= 0 and value.real == round(value.real)


@dataclass(frozen=True)
class Hyp2F1Params:
    a: complex
    b: complex
    c: complex
    z: complex

    def __post_init__(self):
        for name in ('a', 'b', 'c', 'z'):
            value = complex(getattr(self, name))
            ensure_finite(np.array([value.real, value.imag]), name)
            object.__setattr__(self, name, value)
        if _is_nonpositive_integer(self.c):
            raise DomainError(f"c must not be a non-positive integer, got {self.c}")


@dataclass(frozen=True)
class SeriesControl:
    rel_tol: float = SERIES_SETTINGS['rel_tol']
    max_terms: int = SERIES_SETTINGS['max_terms']

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be positive, got {self.max_terms}")


class SeriesResult(NamedTuple):
    value: complex
    terms: int


def hyp2f1(params, ctl=None):
    """
    Sum the 2F1 series until |term_n| < rel_tol * |sum_n|

    Args:
        params (Hyp2F1Params): a, b, c and the argument z
        ctl (SeriesControl): tolerance and term cap

    Returns:
        SeriesResult: (value, number of terms summed)

    Raises:
        DomainError: |z| >= 1
        ConvergenceError: max_terms exhausted
    """
    ctl = ctl or SeriesControl()
    a, b, c, z = params.a, params.b, params.c, params.z
    if abs(z) >= 1.0:
        raise DomainError(f"series branch needs |z| < 1, got |z| = {abs(z)}")

    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    for n in range(ctl.max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) < ctl.rel_tol * abs(total) or term == 0:
            logger.debug(f"2F1 series converged after {n + 2} terms")
            return SeriesResult(total, n + 2)
    raise ConvergenceError(
        f"2F1 series did not converge within {ctl.max_terms} terms",
        last_estimate=total, steps=ctl.max_terms)
