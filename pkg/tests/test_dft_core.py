import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral.dft_core import (
    dft_2d,
    dft_naive_1d,
    fft_1d,
    ifft_1d,
    inverse_dft_2d,
    spectral_derivative_1d,
    spectral_derivative_2d,
)
from spectral.errors import DimensionError, DomainError, ImaginaryResidueError, LengthError
from spectral.signals import ComplexSpectrum1D, ComplexSpectrum2D, RealSignal1D, RealSignal2D, seeded_generator


def test_naive_dft_of_constant_and_impulse():
    assert np.allclose(dft_naive_1d(RealSignal1D([1, 1, 1, 1])).coeffs, [4, 0, 0, 0], atol=1e-12)
    assert np.allclose(dft_naive_1d(RealSignal1D([1, 0, 0])).coeffs, [1, 1, 1], atol=1e-15)


def test_naive_dft_matches_numpy_on_odd_length(rng):
    samples = rng.uniform(-1, 1, 7)
    assert np.allclose(dft_naive_1d(RealSignal1D(samples)).coeffs, np.fft.fft(samples), atol=1e-12)


@given(st.integers(0, 10), st.integers(0, 2 ** 32 - 1))
@settings(deadline=None, max_examples=40)
def test_fft_matches_numpy(exponent, seed):
    n = 2 ** exponent
    samples = seeded_generator(seed, 'fft').uniform(-1, 1, n)
    assert np.allclose(fft_1d(RealSignal1D(samples)).coeffs, np.fft.fft(samples), atol=1e-12 * n)


@given(st.integers(0, 9), st.integers(0, 2 ** 32 - 1))
@settings(deadline=None, max_examples=40)
def test_fft_round_trip(exponent, seed):
    samples = seeded_generator(seed, 'round-trip').uniform(-1, 1, 2 ** exponent)
    signal = RealSignal1D(samples, spacing=0.25, origin=-1.0)
    restored = ifft_1d(fft_1d(signal))
    assert np.allclose(restored.samples, samples, atol=1e-12)
    assert (restored.spacing, restored.origin) == (0.25, -1.0)


def test_fft_requires_power_of_two():
    with pytest.raises(LengthError):
        fft_1d(RealSignal1D([1.0, 2.0, 3.0]))


def test_inverse_refuses_non_hermitian_spectrum():
    with pytest.raises(ImaginaryResidueError) as excinfo:
        ifft_1d(ComplexSpectrum1D([0, 1j, 0, 0]))
    assert excinfo.value.residue > 0


def test_parseval(rng):
    samples = rng.uniform(-1, 1, 128)
    coeffs = fft_1d(RealSignal1D(samples)).coeffs
    assert math.isclose(np.sum(samples ** 2), np.sum(np.abs(coeffs) ** 2) / 128, rel_tol=1e-12)


def test_dft_2d_matches_numpy_and_inverts(rng):
    samples = rng.uniform(-1, 1, (8, 16))
    spectrum = dft_2d(RealSignal2D(samples))
    assert np.allclose(spectrum.coeffs, np.fft.fft2(samples), atol=1e-11)
    assert np.allclose(inverse_dft_2d(spectrum).samples, samples, atol=1e-12)


def test_dft_2d_examples():
    assert np.allclose(dft_2d(RealSignal2D(np.ones((2, 2)))).coeffs, [[4, 0], [0, 0]], atol=1e-15)
    impulse = np.zeros((4, 4))
    impulse[0, 0] = 1.0
    assert np.allclose(dft_2d(RealSignal2D(impulse)).coeffs, 1.0, atol=1e-15)


def test_dft_2d_requires_power_of_two_dims():
    with pytest.raises(DimensionError):
        dft_2d(RealSignal2D(np.ones((3, 4))))


def _periodic(func, n, length):
    return RealSignal1D.from_function(func, n, spacing=length / n)


def test_derivative_of_sine():
    signal = _periodic(np.sin, 64, 2 * math.pi)
    derivative = ifft_1d(spectral_derivative_1d(fft_1d(signal), 2 * math.pi))
    assert np.allclose(derivative.samples, np.cos(signal.grid()), atol=1e-10)


def test_second_derivative_of_sine():
    signal = _periodic(lambda x: np.sin(3 * x), 32, 2 * math.pi)
    second = ifft_1d(spectral_derivative_1d(fft_1d(signal), 2 * math.pi, order=2))
    assert np.allclose(second.samples, -9 * np.sin(3 * signal.grid()), atol=1e-9)


def test_derivative_of_constant_is_zero():
    spectrum = fft_1d(RealSignal1D(np.full(16, 2.5)))
    assert np.allclose(ifft_1d(spectral_derivative_1d(spectrum, 1.0)).samples, 0.0, atol=1e-12)


def test_nyquist_bin_zeroed_for_odd_order_only():
    coeffs = np.zeros(8, dtype=complex)
    coeffs[4] = 1.0
    spectrum = ComplexSpectrum1D(coeffs)
    assert spectral_derivative_1d(spectrum, 8.0).coeffs[4] == 0
    assert spectral_derivative_1d(spectrum, 8.0, order=2).coeffs[4] != 0


def test_derivative_rejects_bad_arguments():
    spectrum = fft_1d(RealSignal1D(np.ones(4)))
    with pytest.raises(DomainError):
        spectral_derivative_1d(spectrum, 0.0)
    with pytest.raises(DomainError):
        spectral_derivative_1d(spectrum, 1.0, order=-1)
    with pytest.raises(DomainError):
        spectral_derivative_2d(ComplexSpectrum2D(np.ones((2, 2))), 'z', (1.0, 1.0))


def test_derivative_2d_along_each_axis():
    n = 16
    signal = RealSignal2D.from_function(lambda xx, yy: np.sin(2 * math.pi * xx), (n, n), (1 / n, 1 / n))
    spectrum = dft_2d(signal)
    yy, xx = signal.grid()
    d_dx = inverse_dft_2d(spectral_derivative_2d(spectrum, 'x', (1.0, 1.0)))
    d_dy = inverse_dft_2d(spectral_derivative_2d(spectrum, 'y', (1.0, 1.0)))
    assert np.allclose(d_dx.samples, 2 * math.pi * np.cos(2 * math.pi * xx), atol=1e-9)
    assert np.allclose(d_dy.samples, 0.0, atol=1e-9)


def test_derivative_2d_uses_row_length_for_y():
    signal = RealSignal2D.from_function(lambda xx, yy: np.cos(2 * math.pi * yy / 2), (16, 8), (2 / 16, 1 / 8))
    d_dy = inverse_dft_2d(spectral_derivative_2d(dft_2d(signal), 'y', signal.domain_lengths))
    yy, _ = signal.grid()
    assert np.allclose(d_dy.samples, -math.pi * np.sin(math.pi * yy), atol=1e-9)
