"""
Signal, spectrum and quadrature value types shared by every engine module

Frequency ordering is the standard DFT order everywhere: index j holds
frequency j for j < n/2 and frequency j - n otherwise. Forward transforms
are unnormalized; inverse transforms carry the 1/n factor.

ComplexScalar is Python's built-in ``complex``.
"""
import math
import zlib
from dataclasses import dataclass, replace
from typing import Callable, Tuple

import numpy as np

from config import QUADRATURE_SETTINGS
from spectral.errors import DimensionError, LengthError, NonFiniteError


def ensure_finite(value, name="value"):
    """Reject NaN/Inf scalars or arrays; returns the value unchanged"""
    if not np.all(np.isfinite(value)):
        raise NonFiniteError(f"{name} must be finite")
    return value


def seeded_generator(seed, name):
    """PCG64 stream keyed by (seed, crc32(name)); independent of run order"""
    entropy = [int(seed), zlib.crc32(name.encode('utf-8'))]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def uniform_samples(rng, shape):
    """Random instance values, uniform on [-1, 1]"""
    return rng.uniform(-1.0, 1.0, size=shape)


def is_power_of_two(n):
    return n >= 1 and (n & (n - 1)) == 0


def next_power_of_two(n):
    """Smallest power of two >= n"""
    return 1 << max(0, (int(n) - 1).bit_length())


def signed_indices(n):
    """Signed frequency index of every bin in standard DFT order"""
    return np.fft.fftfreq(n, d=1.0 / n)


def _frozen_array(values, dtype, ndim, name):
    arr = np.array(values, dtype=dtype, copy=True)
    if arr.ndim != ndim:
        raise DimensionError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    ensure_finite(arr, name)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class RealSignal1D:
    """Uniformly sampled real signal: samples[k] lives at origin + k * spacing"""

    samples: np.ndarray
    spacing: float = 1.0
    origin: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'samples', _frozen_array(self.samples, np.float64, 1, 'samples'))
        if self.samples.size < 1:
            raise LengthError("signal must hold at least one sample")
        ensure_finite(self.spacing, 'spacing')
        ensure_finite(self.origin, 'origin')
        if self.spacing <= 0:
            raise DimensionError(f"spacing must be positive, got {self.spacing}")

    @property
    def n(self):
        return self.samples.size

    @property
    def domain_length(self):
        return self.n * self.spacing

    def grid(self):
        return self.origin + self.spacing * np.arange(self.n)

    @classmethod
    def from_function(cls, func: Callable, n, spacing=1.0, origin=0.0):
        x = origin + spacing * np.arange(n)
        return cls(func(x), spacing, origin)


@dataclass(frozen=True)
class ComplexSpectrum1D:
    """DFT coefficients in standard order plus the originating grid metadata"""

    coeffs: np.ndarray
    spacing: float = 1.0
    origin: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _frozen_array(self.coeffs, np.complex128, 1, 'coeffs'))
        if self.coeffs.size < 1:
            raise LengthError("spectrum must hold at least one coefficient")
        if self.spacing <= 0:
            raise DimensionError(f"spacing must be positive, got {self.spacing}")

    @property
    def n(self):
        return self.coeffs.size

    def angular_frequencies(self, domain_length=None):
        """omega_j = 2*pi*j / L with signed j"""
        length = self.n * self.spacing if domain_length is None else domain_length
        return 2.0 * math.pi * signed_indices(self.n) / length


@dataclass(frozen=True)
class RealSignal2D:
    """Row-major real grid of shape (H, W) with spacings (dy, dx)"""

    samples: np.ndarray
    spacings: Tuple[float, float] = (1.0, 1.0)
    origin: Tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, 'samples', _frozen_array(self.samples, np.float64, 2, 'samples'))
        if self.samples.size == 0:
            raise DimensionError("grid must satisfy H*W > 0")
        _check_spacings(self.spacings)
        object.__setattr__(self, 'spacings', tuple(float(s) for s in self.spacings))
        object.__setattr__(self, 'origin', tuple(float(o) for o in self.origin))

    @property
    def shape(self):
        return self.samples.shape

    @property
    def domain_lengths(self):
        """(Ly, Lx)"""
        return (self.shape[0] * self.spacings[0], self.shape[1] * self.spacings[1])

    def grid(self):
        """(Y, X) coordinate arrays, each of shape (H, W)"""
        h, w = self.shape
        y = self.origin[0] + self.spacings[0] * np.arange(h)
        x = self.origin[1] + self.spacings[1] * np.arange(w)
        return np.meshgrid(y, x, indexing='ij')

    @classmethod
    def from_function(cls, func: Callable, shape, spacings=(1.0, 1.0), origin=(0.0, 0.0)):
        h, w = shape
        y = origin[0] + spacings[0] * np.arange(h)
        x = origin[1] + spacings[1] * np.arange(w)
        yy, xx = np.meshgrid(y, x, indexing='ij')
        return cls(func(xx, yy), spacings, origin)


@dataclass(frozen=True)
class ComplexSpectrum2D:
    """2D DFT coefficients, standard order on both axes"""

    coeffs: np.ndarray
    spacings: Tuple[float, float] = (1.0, 1.0)
    origin: Tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _frozen_array(self.coeffs, np.complex128, 2, 'coeffs'))
        if self.coeffs.size == 0:
            raise DimensionError("spectrum must satisfy H*W > 0")
        _check_spacings(self.spacings)
        object.__setattr__(self, 'spacings', tuple(float(s) for s in self.spacings))
        object.__setattr__(self, 'origin', tuple(float(o) for o in self.origin))

    @property
    def shape(self):
        return self.coeffs.shape

    def ordinary_frequencies(self, domain_lengths=None):
        """(v, u) arrays of shape (H, W): v_j = j / Ly, u_j = j / Lx"""
        h, w = self.shape
        if domain_lengths is None:
            domain_lengths = (h * self.spacings[0], w * self.spacings[1])
        v = signed_indices(h) / domain_lengths[0]
        u = signed_indices(w) / domain_lengths[1]
        return np.meshgrid(v, u, indexing='ij')


def _check_spacings(spacings):
    if len(spacings) != 2:
        raise DimensionError("spacings must be a (dy, dx) pair")
    ensure_finite(np.asarray(spacings, dtype=float), 'spacings')
    if min(spacings) <= 0:
        raise DimensionError(f"spacings must be positive, got {spacings}")


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Simpson rule on [lower, upper] with panel doubling"""

    lower: float
    upper: float
    panels: int = QUADRATURE_SETTINGS['panels']
    target_rel_tol: float = QUADRATURE_SETTINGS['target_rel_tol']
    panel_cap: int = QUADRATURE_SETTINGS['panel_cap']

    def __post_init__(self):
        ensure_finite(np.array([self.lower, self.upper], dtype=float), 'interval')
        if not self.upper > self.lower:
            raise DimensionError(f"upper must exceed lower, got [{self.lower}, {self.upper}]")
        if self.panels < 2 or self.panels % 2:
            raise DimensionError(f"panels must be a positive even integer, got {self.panels}")
        if not self.target_rel_tol > 0:
            raise DimensionError("target_rel_tol must be positive")

    def over(self, lower, upper):
        """Same rule and tolerance on another interval"""
        return replace(self, lower=float(lower), upper=float(upper))
