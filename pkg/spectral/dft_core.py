"""
Discrete Fourier transforms and spectral differentiation

Conventions:
    - 1D closed forms use angular frequency (e^{-i omega x}); the spectral
      derivative multiplies by i*omega_j with omega_j = 2*pi*j / L.
    - 2D uses ordinary frequency (e^{-i 2 pi (ux + vy)}); the derivative
      multiplies by i*2*pi*u_j with u_j = j / L.
    - Forward transforms are unnormalized, inverses divide by n.
    - 2D pairs are always (y, x) == (rows, columns).
"""
import logging

import numpy as np

from config import FFT_SETTINGS
from spectral.errors import DimensionError, DomainError, ImaginaryResidueError, LengthError
from spectral.signals import (
    ComplexSpectrum1D,
    ComplexSpectrum2D,
    RealSignal1D,
    RealSignal2D,
    is_power_of_two,
    signed_indices,
)

logger = logging.getLogger('dft_core')

AXES = {'y': 0, 'x': 1}


def _bit_reverse_indices(n):
    """Bit-reversal permutation for power-of-two n"""
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.intp)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def _fft_kernel(values, inverse=False):
    """
    Iterative radix-2 Cooley-Tukey transform along the last axis

    Butterflies of a stage are applied to all blocks (and all leading axes)
    at once. No normalization is applied.
    """
    x = np.asarray(values, dtype=np.complex128)
    n = x.shape[-1]
    if not is_power_of_two(n):
        raise LengthError(f"radix-2 FFT needs a power-of-two length, got {n} (zero-pad first)")
    x = np.ascontiguousarray(x[..., _bit_reverse_indices(n)])
    sign = 1.0 if inverse else -1.0
    m = 2
    while m <= n:
        half = m // 2
        w = np.exp(sign * 2j * np.pi * np.arange(half) / m)
        blocks = x.reshape(x.shape[:-1] + (n // m, m))
        u = blocks[..., :half].copy()
        t = blocks[..., half:] * w
        blocks[..., :half] = u + t
        blocks[..., half:] = u - t
        m <<= 1
    return x


def _discard_residue(values, coeffs):
    """Return the real part, refusing residues a real signal cannot leave"""
    residue = float(np.max(np.abs(values.imag))) if values.size else 0.0
    scale = float(np.max(np.abs(coeffs))) if coeffs.size else 0.0
    if residue > FFT_SETTINGS['residue_tol'] * scale:
        raise ImaginaryResidueError(
            f"imaginary residue {residue:.3e} exceeds tolerance; spectrum is not conjugate-symmetric",
            residue=residue)
    return values.real


def dft_naive_1d(signal):
    """
    O(n^2) DFT used as the oracle for the FFT

    Accumulates samples in ascending k so the result is reproducible
    bit-for-bit; works for any length.
    """
    n = signal.n
    j = np.arange(n)
    coeffs = np.zeros(n, dtype=np.complex128)
    for k in range(n):
        coeffs += signal.samples[k] * np.exp(-2j * np.pi * ((j * k) % n) / n)
    return ComplexSpectrum1D(coeffs, signal.spacing, signal.origin)


def fft_1d(signal):
    """Radix-2 FFT of a power-of-two length real signal"""
    return ComplexSpectrum1D(_fft_kernel(signal.samples), signal.spacing, signal.origin)


def ifft_1d(spectrum):
    """
    Inverse FFT back to a real signal

    Raises:
        LengthError: length is not a power of two
        ImaginaryResidueError: residue above 1e-10 * max|coeff|
    """
    values = _fft_kernel(spectrum.coeffs, inverse=True) / spectrum.n
    return RealSignal1D(_discard_residue(values, spectrum.coeffs), spectrum.spacing, spectrum.origin)


def _require_power_of_two_dims(shape):
    h, w = shape
    if not (is_power_of_two(h) and is_power_of_two(w)):
        raise DimensionError(f"2D FFT needs power-of-two dimensions, got {h}x{w}")


def _fft2_kernel(values, inverse=False):
    rows = _fft_kernel(values, inverse)
    return _fft_kernel(rows.T, inverse).T


def dft_2d(signal):
    """Separable row-column FFT of a real grid"""
    _require_power_of_two_dims(signal.shape)
    return ComplexSpectrum2D(_fft2_kernel(signal.samples), signal.spacings, signal.origin)


def inverse_dft_2d(spectrum):
    """Inverse of dft_2d with the same imaginary-residue rule as ifft_1d"""
    _require_power_of_two_dims(spectrum.shape)
    h, w = spectrum.shape
    values = _fft2_kernel(spectrum.coeffs, inverse=True) / (h * w)
    return RealSignal2D(_discard_residue(values, spectrum.coeffs), spectrum.spacings, spectrum.origin)


def _derivative_factor(frequencies, scale, order, n):
    if order < 0:
        raise DomainError(f"derivative order must be non-negative, got {order}")
    factor = (1j * scale * frequencies) ** order
    # i*omega at Nyquist is sign-ambiguous for odd orders
    if order % 2 and n % 2 == 0:
        factor[n // 2] = 0.0
    return factor


def spectral_derivative_1d(spectrum, domain_length, order=1):
    """
    Differentiate in the frequency domain: coeffs[j] *= (i*omega_j)**order

    Args:
        spectrum (ComplexSpectrum1D): standard ordering
        domain_length (float): period L of the sampled domain
        order (int): derivative order, default 1

    Returns:
        ComplexSpectrum1D
    """
    if not domain_length > 0:
        raise DomainError(f"domain_length must be positive, got {domain_length}")
    omega = spectrum.angular_frequencies(domain_length)
    factor = _derivative_factor(omega, 1.0, order, spectrum.n)
    return ComplexSpectrum1D(spectrum.coeffs * factor, spectrum.spacing, spectrum.origin)


def spectral_derivative_2d(spectrum, axis, domain_lengths, order=1):
    """
    Partial derivative along 'x' (columns) or 'y' (rows): factor (i*2*pi*u_j)**order

    domain_lengths is (Ly, Lx).
    """
    if axis not in AXES:
        raise DomainError(f"axis must be 'x' or 'y', got {axis!r}")
    if min(domain_lengths) <= 0:
        raise DomainError(f"domain lengths must be positive, got {domain_lengths}")
    dim = AXES[axis]
    n = spectrum.shape[dim]
    u = signed_indices(n) / domain_lengths[dim]
    factor = _derivative_factor(u, 2.0 * np.pi, order, n)
    factor = factor[:, None] if dim == 0 else factor[None, :]
    return ComplexSpectrum2D(spectrum.coeffs * factor, spectrum.spacings, spectrum.origin)
