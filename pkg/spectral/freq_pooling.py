"""
Pooling and global-average pooling in the frequency domain

Ordinary-frequency convention (e^{-i 2 pi (ux + vy)}), like the rest of 2D.
Max pooling has no closed form here and is not provided.
"""
import logging
from dataclasses import dataclass

import numpy as np

from config import FFT_SETTINGS
from spectral.errors import DimensionError, ImaginaryResidueError
from spectral.signals import ComplexSpectrum2D, RealSignal2D, ensure_finite, signed_indices

logger = logging.getLogger('freq_pooling')


@dataclass(frozen=True)
class BoxKernel:
    """Average-pooling box: 1/(W H) inside |x| < W/2, |y| < H/2"""

    W: float
    H: float

    def __post_init__(self):
        ensure_finite(np.array([self.W, self.H], dtype=float), 'box widths')
        if not (self.W > 0 and self.H > 0):
            raise DimensionError(f"box widths must be positive, got W={self.W}, H={self.H}")

    @property
    def amplitude(self):
        return 1.0 / (self.W * self.H)


@dataclass(frozen=True)
class TruncationSpec:
    out_h: int
    out_w: int

    def __post_init__(self):
        if self.out_h < 1 or self.out_w < 1:
            raise DimensionError(f"output dims must be positive, got {self.out_h}x{self.out_w}")


def box_ft(kernel, u, v):
    """sinc(W u) * sinc(H v) with the normalized sinc(t) = sin(pi t) / (pi t)"""
    ensure_finite(np.array([u, v], dtype=float), 'frequency')
    return float(np.sinc(kernel.W * u) * np.sinc(kernel.H * v))


def avg_pool_direct(signal, window):
    """
    Non-overlapping window means

    Args:
        signal (RealSignal2D): input grid
        window (tuple): (rows, cols) per window

    Raises:
        DimensionError: grid dims not divisible by the window
    """
    wh, ww = window
    h, w = signal.shape
    if wh < 1 or ww < 1 or h % wh or w % ww:
        raise DimensionError(f"{h}x{w} grid is not divisible by window {wh}x{ww}")
    pooled = signal.samples.reshape(h // wh, wh, w // ww, ww).mean(axis=(1, 3))
    spacings = (signal.spacings[0] * wh, signal.spacings[1] * ww)
    return RealSignal2D(pooled, spacings, signal.origin)


def spectral_pool_truncate(spectrum, spec):
    """
    Keep the out_h x out_w lowest frequencies of a 2D spectrum

    The kept block is selected by signed frequency, then made conjugate
    symmetric so its inverse is real, then rescaled by (out_h out_w)/(H W)
    so a constant image pools to the same constant.
    """
    h, w = spectrum.shape
    if spec.out_h > h or spec.out_w > w:
        raise DimensionError(f"cannot truncate {h}x{w} to {spec.out_h}x{spec.out_w}")
    rows = signed_indices(spec.out_h).astype(int) % h
    cols = signed_indices(spec.out_w).astype(int) % w
    kept = spectrum.coeffs[np.ix_(rows, cols)]

    mirror_rows = (-np.arange(spec.out_h)) % spec.out_h
    mirror_cols = (-np.arange(spec.out_w)) % spec.out_w
    kept = 0.5 * (kept + np.conj(kept[np.ix_(mirror_rows, mirror_cols)]))

    scale = (spec.out_h * spec.out_w) / (h * w)
    spacings = (spectrum.spacings[0] * h / spec.out_h, spectrum.spacings[1] * w / spec.out_w)
    logger.debug(f"spectral pooling {h}x{w} -> {spec.out_h}x{spec.out_w}")
    return ComplexSpectrum2D(kept * scale, spacings, spectrum.origin)


def sinc_lowpass_2d(spectrum, kernel):
    """Multiply every bin by box_ft(kernel, u_j, v_j): average pooling as a low-pass filter"""
    v, u = spectrum.ordinary_frequencies()
    response = np.sinc(kernel.W * u) * np.sinc(kernel.H * v)
    return ComplexSpectrum2D(spectrum.coeffs * response, spectrum.spacings, spectrum.origin)


def gap_spatial(signal):
    """Global average pooling: arithmetic mean of the grid"""
    return float(np.mean(signal.samples))


def gap_spectral(spectrum):
    """
    Global average pooling read off the DC bin: Re(coeffs[0, 0]) / (H W)

    Raises:
        ImaginaryResidueError: DC bin carries a non-negligible imaginary part
    """
    dc = spectrum.coeffs[0, 0]
    if abs(dc.imag) > FFT_SETTINGS['residue_tol'] * max(abs(dc), 1.0):
        raise ImaginaryResidueError(f"DC bin has imaginary part {dc.imag:.3e}", residue=abs(dc.imag))
    return float(dc.real) / spectrum.coeffs.size
