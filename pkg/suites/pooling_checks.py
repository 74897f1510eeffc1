"""
Pooling Checks - sinc transform of the box, spectral truncation, GAP as DC
"""
import math

import numpy as np

from spectral.dft_core import dft_2d, inverse_dft_2d
from spectral.finite_difference import max_abs_error, relative_error
from spectral.freq_pooling import (
    BoxKernel,
    TruncationSpec,
    avg_pool_direct,
    box_ft,
    gap_spatial,
    gap_spectral,
    sinc_lowpass_2d,
    spectral_pool_truncate,
)
from spectral.quadrature import continuous_ft2_quadrature
from spectral.signals import QuadratureSpec, RealSignal2D, uniform_samples
from suites.registry import Suite, check

SINC = 'average pooling as a sinc product'
TRUNCATION = 'spectral truncation pooling'
GAP = 'global average pooling as the DC coefficient'

# 2u and 2v stay clear of the integer sinc zeros for W = H = 2
BOX_FREQUENCIES = (0.1, 0.3, 0.45, 0.7, 0.85)


def _cosine_grid(shape, spacings, modes):
    """Sum of cos(2 pi (a x + b y)) for integer (a, b) cycles over the unit square"""
    signal = RealSignal2D.from_function(
        lambda xx, yy: sum(np.cos(2 * math.pi * (a * xx + b * yy)) for a, b in modes), shape, spacings)
    return signal


class PoolingChecks(Suite):
    """Pooling operators and their frequency-domain forms"""

    name = 'pooling'

    @check('pool.box_ft_examples', SINC, 1e-15)
    def box_ft_examples(self, rng):
        return max(abs(box_ft(BoxKernel(1.0, 1.0), 0.0, 0.0) - 1.0), abs(box_ft(BoxKernel(1.0, 1.0), 1.0, 0.0)))

    @check('pool.box_ft_matches_quadrature', SINC, 1e-7)
    def box_ft_matches_quadrature(self, rng):
        kernel = BoxKernel(2.0, 2.0)
        spec_x = QuadratureSpec(-kernel.W / 2, kernel.W / 2, target_rel_tol=1e-9)
        spec_y = QuadratureSpec(-kernel.H / 2, kernel.H / 2, target_rel_tol=1e-9)
        box = lambda x, y: np.full(np.shape(x), kernel.amplitude)
        worst = 0.0
        for u in BOX_FREQUENCIES:
            for v in BOX_FREQUENCIES:
                numeric = continuous_ft2_quadrature(box, u, v, spec_x, spec_y)
                worst = max(worst, relative_error(box_ft(kernel, u, v), numeric))
        return worst

    @check('pool.box_ft_even', SINC, 1e-300)
    def box_ft_even(self, rng):
        """Exact evenness in each argument; the tolerance only admits zero"""
        kernel = BoxKernel(*rng.uniform(0.5, 3.0, 2))
        worst = 0.0
        for u, v in zip(uniform_samples(rng, 30) * 3, uniform_samples(rng, 30) * 3):
            value = box_ft(kernel, u, v)
            worst = max(worst, abs(value - box_ft(kernel, -u, v)), abs(value - box_ft(kernel, u, -v)))
        return worst

    @check('pool.box_ft_bounded', SINC, 1e-15)
    def box_ft_bounded(self, rng):
        kernel = BoxKernel(1.5, 0.75)
        grid = np.linspace(-4.0, 4.0, 81)
        values = np.array([[box_ft(kernel, u, v) for u in grid] for v in grid])
        return max(float(np.max(np.abs(values))) - 1.0, 0.0) + abs(box_ft(kernel, 0.0, 0.0) - 1.0)

    @check('pool.avg_pool_direct', 'average pooling', 1e-15)
    def avg_pool(self, rng):
        errors = [max_abs_error(avg_pool_direct(RealSignal2D([[1, 2], [3, 4]]), (2, 2)).samples, [[2.5]]),
                  max_abs_error(avg_pool_direct(RealSignal2D(np.full((8, 8), 0.375)), (4, 2)).samples, 0.375)]
        samples = uniform_samples(rng, (8, 8))
        expected = np.zeros((4, 4))
        for r in range(4):
            for c in range(4):
                expected[r, c] = sum(samples[2 * r + i, 2 * c + j] for i in range(2) for j in range(2)) / 4
        errors.append(max_abs_error(avg_pool_direct(RealSignal2D(samples), (2, 2)).samples, expected))
        return max(errors)

    @check('pool.truncate_constant', TRUNCATION, 1e-15)
    def truncate_constant(self, rng):
        c = 0.625
        spectrum = dft_2d(RealSignal2D(np.full((8, 8), c)))
        pooled = inverse_dft_2d(spectral_pool_truncate(spectrum, TruncationSpec(4, 4)))
        return max_abs_error(pooled.samples, c)

    @check('pool.truncate_full_size', TRUNCATION, 1e-12)
    def truncate_full_size(self, rng):
        signal = RealSignal2D(uniform_samples(rng, (8, 16)))
        pooled = inverse_dft_2d(spectral_pool_truncate(dft_2d(signal), TruncationSpec(8, 16)))
        return max_abs_error(pooled.samples, signal.samples)

    @check('pool.truncate_in_band_cosine', TRUNCATION, 1e-10)
    def truncate_in_band_cosine(self, rng):
        modes = [(1, 2), (3, 1)]
        fine = _cosine_grid((16, 16), (1 / 16, 1 / 16), modes)
        coarse = _cosine_grid((8, 8), (1 / 8, 1 / 8), modes)
        pooled = inverse_dft_2d(spectral_pool_truncate(dft_2d(fine), TruncationSpec(8, 8)))
        return max_abs_error(pooled.samples, coarse.samples)

    @check('pool.truncate_energy', TRUNCATION, 1e-12)
    def truncate_energy(self, rng):
        """Mean-square energy after pooling never exceeds the input's"""
        worst = 0.0
        for _ in range(10):
            signal = RealSignal2D(uniform_samples(rng, (16, 16)))
            pooled = inverse_dft_2d(spectral_pool_truncate(dft_2d(signal), TruncationSpec(8, 4)))
            worst = max(worst, float(np.mean(pooled.samples ** 2) - np.mean(signal.samples ** 2)))
        return max(worst, 0.0)

    @check('pool.sinc_lowpass', SINC, 1e-12)
    def sinc_lowpass(self, rng):
        """DC is kept and no bin grows"""
        spectrum = dft_2d(RealSignal2D(uniform_samples(rng, (16, 16)), spacings=(0.25, 0.25)))
        filtered = sinc_lowpass_2d(spectrum, BoxKernel(0.5, 0.5))
        growth = float(np.max(np.abs(filtered.coeffs) - np.abs(spectrum.coeffs)))
        return max(abs(filtered.coeffs[0, 0] - spectrum.coeffs[0, 0]), max(growth, 0.0))

    @check('pool.gap_equivalence', GAP, 1e-12)
    def gap_equivalence(self, rng):
        errors = []
        for _ in range(20):
            signal = RealSignal2D(uniform_samples(rng, (8, 8)))
            errors.append(abs(gap_spatial(signal) - gap_spectral(dft_2d(signal))))
        constant = RealSignal2D(np.full((4, 4), -1.5))
        errors.append(abs(gap_spatial(constant) + 1.5) + abs(gap_spectral(dft_2d(constant)) + 1.5))
        samples = uniform_samples(rng, (8, 8))
        zero_mean = RealSignal2D(samples - samples.mean())
        errors.append(abs(gap_spatial(zero_mean)) + abs(gap_spectral(dft_2d(zero_mean))))
        return max(errors)


def setup(registry):
    registry.add_suite(PoolingChecks)
