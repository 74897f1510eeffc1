"""
DFT Checks - naive DFT, radix-2 FFT, transform properties, spectral derivatives
"""
import math

import numpy as np

from spectral.dft_core import (
    dft_2d,
    dft_naive_1d,
    fft_1d,
    ifft_1d,
    inverse_dft_2d,
    spectral_derivative_1d,
    spectral_derivative_2d,
)
from spectral.finite_difference import central_difference_4, max_abs_error
from spectral.freq_activations import relu_ft
from spectral.quadrature import continuous_ft_quadrature
from spectral.signals import QuadratureSpec, RealSignal1D, RealSignal2D, uniform_samples
from suites.registry import Suite, check

FFT_LENGTHS = [2 ** e for e in range(1, 11)]


def _naive_dft_2d(samples):
    """Doubly nested summation over the whole grid"""
    h, w = samples.shape
    rows = np.exp(-2j * np.pi * np.outer(np.arange(h), np.arange(h)) / h)
    cols = np.exp(-2j * np.pi * np.outer(np.arange(w), np.arange(w)) / w)
    return rows @ samples @ cols


class DftChecks(Suite):
    """Discrete transforms against the O(n^2) oracle"""

    name = 'dft'

    @check('dft.naive_examples', 'DFT of constant and impulse', 1e-12)
    def naive_examples(self, rng):
        errors = [
            max_abs_error(dft_naive_1d(RealSignal1D([1, 1, 1, 1])).coeffs, [4, 0, 0, 0]),
            max_abs_error(dft_naive_1d(RealSignal1D([1, 0, 0, 0])).coeffs, [1, 1, 1, 1]),
            max_abs_error(fft_1d(RealSignal1D([0, 1, 0, -1])).coeffs, [0, -2j, 0, 2j]),
            max_abs_error(ifft_1d(fft_1d(RealSignal1D([1, 2, 3, 4]))).samples, [1, 2, 3, 4]),
        ]
        return max(errors)

    @check('dft.fft_matches_naive', 'fast evaluation of the Fourier integral', 1e-12)
    def fft_matches_naive(self, rng):
        """Per-coefficient error divided by n, worst over lengths 2..1024"""
        worst = 0.0
        for n in FFT_LENGTHS:
            signal = RealSignal1D(uniform_samples(rng, n))
            error = max_abs_error(fft_1d(signal).coeffs, dft_naive_1d(signal).coeffs)
            worst = max(worst, error / n)
        return worst

    @check('dft.inverse_round_trip', 'inverse Fourier transform', 1e-12)
    def inverse_round_trip(self, rng):
        signal = RealSignal1D(uniform_samples(rng, 32))
        return max_abs_error(ifft_1d(fft_1d(signal)).samples, signal.samples) / 32

    @check('dft.linearity', 'linearity of the Fourier transform', 1e-12)
    def linearity(self, rng):
        n = 64
        f, g = uniform_samples(rng, n), uniform_samples(rng, n)
        alpha, beta = uniform_samples(rng, 2)
        combined = fft_1d(RealSignal1D(alpha * f + beta * g)).coeffs
        separate = alpha * fft_1d(RealSignal1D(f)).coeffs + beta * fft_1d(RealSignal1D(g)).coeffs
        return max_abs_error(combined, separate) / n

    @check('dft.conjugate_symmetry', 'real input has a Hermitian spectrum', 1e-12)
    def conjugate_symmetry(self, rng):
        n = 128
        coeffs = fft_1d(RealSignal1D(uniform_samples(rng, n))).coeffs
        mirrored = np.conj(coeffs[(-np.arange(n)) % n])
        return max_abs_error(coeffs, mirrored) / n

    @check('dft.parseval', 'Parseval energy identity', 1e-10)
    def parseval(self, rng):
        n = 256
        samples = uniform_samples(rng, n)
        coeffs = fft_1d(RealSignal1D(samples)).coeffs
        return abs(np.sum(samples ** 2) - np.sum(np.abs(coeffs) ** 2) / n) / n

    @check('dft.dft2_matches_naive', 'two-dimensional transform pair', 1e-11)
    def dft2_matches_naive(self, rng):
        samples = uniform_samples(rng, (8, 8))
        return max_abs_error(dft_2d(RealSignal2D(samples)).coeffs, _naive_dft_2d(samples))

    @check('dft.dft2_examples', 'two-dimensional transform pair', 1e-12)
    def dft2_examples(self, rng):
        c = 0.75
        constant = dft_2d(RealSignal2D(np.full((4, 4), c))).coeffs
        expected = np.zeros((4, 4))
        expected[0, 0] = 16 * c
        impulse = np.zeros((4, 4))
        impulse[0, 0] = 1.0
        flat = dft_2d(RealSignal2D(impulse)).coeffs
        return max(max_abs_error(constant, expected), max_abs_error(flat, np.ones((4, 4))))

    @check('dft.dft2_round_trip', 'two-dimensional transform pair', 1e-12)
    def dft2_round_trip(self, rng):
        signal = RealSignal2D(uniform_samples(rng, (16, 8)))
        restored = inverse_dft_2d(dft_2d(signal))
        return max_abs_error(restored.samples, signal.samples) / signal.samples.size

    @check('dft.quadrature_box', 'continuous Fourier integral', 1e-10)
    def quadrature_box(self, rng):
        spec = QuadratureSpec(-0.5, 0.5)
        box = lambda x: np.ones_like(x)
        dc = continuous_ft_quadrature(box, 0.0, spec)
        zero = continuous_ft_quadrature(box, 2 * math.pi, spec)
        return max(abs(dc - 1.0), abs(zero))

    @check('dft.quadrature_vs_relu_form', 'continuous Fourier integral', 1e-8)
    def quadrature_vs_relu_form(self, rng):
        spec = QuadratureSpec(0.0, 1.0, target_rel_tol=1e-12)
        numeric = continuous_ft_quadrature(lambda x: x, 1.0, spec)
        return abs(numeric - relu_ft(1.0, 1.0))

    @check('dft.derivative_sin', 'derivative theorem, one dimension', 1e-10)
    def derivative_sin(self, rng):
        n = 64
        signal = RealSignal1D.from_function(np.sin, n, spacing=2 * math.pi / n)
        derivative = ifft_1d(spectral_derivative_1d(fft_1d(signal), signal.domain_length))
        return max_abs_error(derivative.samples, np.cos(signal.grid()))

    @check('dft.derivative_constant', 'derivative theorem, one dimension', 1e-12)
    def derivative_constant(self, rng):
        spectrum = fft_1d(RealSignal1D(np.full(16, 3.0)))
        return float(np.max(np.abs(spectral_derivative_1d(spectrum, 16.0).coeffs)))

    @check('dft.derivative_finite_difference', 'derivative theorem, one dimension', 1e-6)
    def derivative_finite_difference(self, rng):
        """Band-limited trigonometric polynomial against a five-point stencil"""
        n, top = 64, 8
        a, b = uniform_samples(rng, top), uniform_samples(rng, top)
        k = np.arange(1, top + 1)
        func = lambda x: np.sum(a * np.cos(k * x) + b * np.sin(k * x))
        signal = RealSignal1D(np.array([func(x) for x in 2 * math.pi * np.arange(n) / n]),
                              spacing=2 * math.pi / n)
        derivative = ifft_1d(spectral_derivative_1d(fft_1d(signal), signal.domain_length)).samples
        reference = np.array([central_difference_4(func, x, h=1e-3) for x in signal.grid()])
        return max_abs_error(derivative, reference)

    @check('dft.second_derivative', 'higher derivatives as powers of i omega', 1e-9)
    def second_derivative(self, rng):
        n = 64
        signal = RealSignal1D.from_function(np.sin, n, spacing=2 * math.pi / n)
        second = ifft_1d(spectral_derivative_1d(fft_1d(signal), signal.domain_length, order=2))
        return max_abs_error(second.samples, -np.sin(signal.grid()))

    @check('dft.derivative_2d', 'derivative theorem, two dimensions', 1e-9)
    def derivative_2d(self, rng):
        n = 16
        signal = RealSignal2D.from_function(lambda xx, yy: np.sin(2 * math.pi * xx), (n, n),
                                            spacings=(1.0 / n, 1.0 / n))
        spectrum = dft_2d(signal)
        d_dx = inverse_dft_2d(spectral_derivative_2d(spectrum, 'x', signal.domain_lengths))
        d_dy = inverse_dft_2d(spectral_derivative_2d(spectrum, 'y', signal.domain_lengths))
        _, xx = signal.grid()
        return max(max_abs_error(d_dx.samples, 2 * math.pi * np.cos(2 * math.pi * xx)),
                   float(np.max(np.abs(d_dy.samples))))

    @check('dft.derivative_2d_finite_difference', 'derivative theorem, two dimensions', 1e-5)
    def derivative_2d_finite_difference(self, rng):
        n, top = 16, 4
        amp = uniform_samples(rng, (top, top))
        k = np.arange(1, top + 1)

        def func(x, y):
            return float(np.sum(amp * np.sin(2 * math.pi * np.outer(k * y, np.ones(top)))
                                * np.cos(2 * math.pi * np.outer(np.ones(top), k * x))))

        signal = RealSignal2D.from_function(np.vectorize(func), (n, n), spacings=(1.0 / n, 1.0 / n))
        d_dx = inverse_dft_2d(spectral_derivative_2d(dft_2d(signal), 'x', signal.domain_lengths)).samples
        yy, xx = signal.grid()
        reference = np.vectorize(lambda x, y: central_difference_4(lambda s: func(s, y), x, h=5e-4))(xx, yy)
        return max_abs_error(d_dx, reference)


def setup(registry):
    registry.add_suite(DftChecks)
