"""
Direct and spectral convolution, 1D and 2D

Linear (not circular) convolution is the contract: the spectral path pads
both operands to a power of two >= n + m - 1 so the circular wrap never
touches the kept window. The kernel is not flipped relative to the
definition out[k] = sum_j f[j] g[k - j].
"""
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from spectral.dft_core import _discard_residue, _fft2_kernel, _fft_kernel
from spectral.errors import DimensionError, LengthError
from spectral.signals import (
    ComplexSpectrum1D,
    RealSignal1D,
    RealSignal2D,
    is_power_of_two,
    next_power_of_two,
)

logger = logging.getLogger('conv_spectral')

MODES = ('full', 'same')


@dataclass(frozen=True)
class ConvPlan:
    """Padding and trimming plan; every length tuple is per axis"""

    input_lens: Tuple[int, ...]
    kernel_lens: Tuple[int, ...]
    padded_lens: Tuple[int, ...]
    mode: str = 'full'

    def __post_init__(self):
        if self.mode not in MODES:
            raise DimensionError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not len(self.input_lens) == len(self.kernel_lens) == len(self.padded_lens):
            raise DimensionError("plan axes disagree")
        for n, m, p in zip(self.input_lens, self.kernel_lens, self.padded_lens):
            if n < 1 or m < 1:
                raise LengthError("convolution operands must be non-empty")
            if not is_power_of_two(p) or p < n + m - 1:
                raise LengthError(f"padded length {p} must be a power of two >= {n + m - 1}")

    @classmethod
    def for_lengths(cls, input_lens, kernel_lens, mode='full'):
        input_lens, kernel_lens = tuple(input_lens), tuple(kernel_lens)
        padded = tuple(next_power_of_two(n + m - 1) for n, m in zip(input_lens, kernel_lens))
        return cls(input_lens, kernel_lens, padded, mode)

    @classmethod
    def for_signals(cls, f, g, mode='full'):
        """Plan for two RealSignal1D or two RealSignal2D operands"""
        if isinstance(f, RealSignal2D):
            return cls.for_lengths(f.shape, g.shape, mode)
        return cls.for_lengths((f.n,), (g.n,), mode)

    @property
    def full_lens(self):
        return tuple(n + m - 1 for n, m in zip(self.input_lens, self.kernel_lens))

    def window(self):
        """Slices selecting the mode window out of the full output

        'same' keeps input-length samples centered on the full output,
        biased to the left on ties.
        """
        if self.mode == 'full':
            return tuple(slice(0, full) for full in self.full_lens)
        return tuple(slice((m - 1) // 2, (m - 1) // 2 + n)
                     for n, m in zip(self.input_lens, self.kernel_lens))

    def check_operands(self, f_lens, g_lens):
        if tuple(f_lens) != self.input_lens or tuple(g_lens) != self.kernel_lens:
            raise LengthError(
                f"plan built for {self.input_lens} * {self.kernel_lens}, got {tuple(f_lens)} * {tuple(g_lens)}")


def conv_direct_1d(f, g):
    """
    Full linear convolution by direct summation (the oracle)

    Each output accumulates f[j] * g[k - j] in ascending j.
    """
    n, m = f.n, g.n
    out = np.zeros(n + m - 1)
    for j in range(n):
        out[j:j + m] += f.samples[j] * g.samples
    return RealSignal1D(out, f.spacing, f.origin + g.origin)


def conv_spectral_1d(f, g, plan=None):
    """
    Convolution through the pointwise spectral product

    zero-pad -> FFT -> elementwise product -> inverse FFT -> trim
    """
    plan = plan or ConvPlan.for_signals(f, g)
    plan.check_operands((f.n,), (g.n,))
    (padded,) = plan.padded_lens
    fa = np.zeros(padded)
    ga = np.zeros(padded)
    fa[:f.n] = f.samples
    ga[:g.n] = g.samples
    product = _fft_kernel(fa) * _fft_kernel(ga)
    full = _discard_residue(_fft_kernel(product, inverse=True) / padded, product)
    (window,) = plan.window()
    origin = f.origin + g.origin + window.start * f.spacing
    return RealSignal1D(full[window], f.spacing, origin)


def conv_direct_2d(f, g):
    """Full 2D linear convolution by direct summation"""
    (h, w), (kh, kw) = f.shape, g.shape
    out = np.zeros((h + kh - 1, w + kw - 1))
    for r in range(h):
        for c in range(w):
            out[r:r + kh, c:c + kw] += f.samples[r, c] * g.samples
    origin = (f.origin[0] + g.origin[0], f.origin[1] + g.origin[1])
    return RealSignal2D(out, f.spacings, origin)


def conv_spectral_2d(f, g, plan=None):
    """2D convolution via per-axis padding and the separable FFT"""
    plan = plan or ConvPlan.for_signals(f, g)
    plan.check_operands(f.shape, g.shape)
    fa = np.zeros(plan.padded_lens)
    ga = np.zeros(plan.padded_lens)
    fa[:f.shape[0], :f.shape[1]] = f.samples
    ga[:g.shape[0], :g.shape[1]] = g.samples
    product = _fft2_kernel(fa) * _fft2_kernel(ga)
    full = _discard_residue(_fft2_kernel(product, inverse=True) / product.size, product)
    rows, cols = plan.window()
    origin = (f.origin[0] + g.origin[0] + rows.start * f.spacings[0],
              f.origin[1] + g.origin[1] + cols.start * f.spacings[1])
    return RealSignal2D(full[rows, cols], f.spacings, origin)


def pointwise_product_grad(upstream, other_factor):
    """
    Gradient through G = F1 * F2 with respect to F1: upstream[j] * F2[j]

    upstream is dL/dG in the Wirtinger sense, so the result is dL/dF1.
    """
    if upstream.n != other_factor.n:
        raise LengthError(f"spectra lengths differ: {upstream.n} vs {other_factor.n}")
    return ComplexSpectrum1D(upstream.coeffs * other_factor.coeffs, upstream.spacing, upstream.origin)
