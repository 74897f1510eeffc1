"""
Convolution Checks - spectral vs direct convolution and the product gradient
"""
import numpy as np

from spectral.conv_spectral import (
    ConvPlan,
    conv_direct_1d,
    conv_direct_2d,
    conv_spectral_1d,
    conv_spectral_2d,
    pointwise_product_grad,
)
from spectral.finite_difference import max_abs_error, relative_error, wirtinger_gradient
from spectral.signals import ComplexSpectrum1D, RealSignal1D, RealSignal2D, uniform_samples
from suites.registry import Suite, check

THEOREM = 'Fourier convolution theorem'


def _random_1d(rng, max_len):
    n = int(rng.integers(1, max_len + 1))
    return RealSignal1D(uniform_samples(rng, n))


def _random_2d(rng, max_side):
    shape = tuple(int(s) for s in rng.integers(1, max_side + 1, size=2))
    return RealSignal2D(uniform_samples(rng, shape))


class ConvChecks(Suite):
    """Linear convolution through the pointwise spectral product"""

    name = 'conv'

    @check('conv.direct_examples', 'discrete convolution sum', 1e-15)
    def direct_examples(self, rng):
        a, b, c = 0.5, -1.25, 2.0
        cases = [
            (([1, 0, 0], [a, b, c]), [a, b, c, 0, 0]),
            (([1, 1], [1, 1]), [1, 2, 1]),
            (([1, 2], [3, 4, 5]), [3, 10, 13, 10]),
        ]
        errors = [max_abs_error(conv_direct_1d(RealSignal1D(f), RealSignal1D(g)).samples, expected)
                  for (f, g), expected in cases]
        ones = RealSignal2D(np.ones((2, 2)))
        errors.append(max_abs_error(conv_direct_2d(ones, ones).samples, [[1, 2, 1], [2, 4, 2], [1, 2, 1]]))
        return max(errors)

    @check('conv.spectral_matches_direct_1d', THEOREM, 1e-10)
    def spectral_matches_direct_1d(self, rng):
        """Worst error over 50 random pairs, divided by the output length"""
        worst = 0.0
        for _ in range(50):
            f, g = _random_1d(rng, 128), _random_1d(rng, 128)
            error = max_abs_error(conv_spectral_1d(f, g).samples, conv_direct_1d(f, g).samples)
            worst = max(worst, error / (f.n + g.n - 1))
        return worst

    @check('conv.spectral_matches_direct_2d', THEOREM + ', two dimensions', 1e-10)
    def spectral_matches_direct_2d(self, rng):
        worst = 0.0
        for _ in range(20):
            f, g = _random_2d(rng, 16), _random_2d(rng, 16)
            full = conv_direct_2d(f, g)
            error = max_abs_error(conv_spectral_2d(f, g).samples, full.samples)
            worst = max(worst, error / full.samples.size)
        return worst

    @check('conv.impulse_identity', THEOREM, 1e-12)
    def impulse_identity(self, rng):
        f = RealSignal1D(uniform_samples(rng, 17))
        delta = RealSignal1D([1.0, 0.0, 0.0])
        padded = np.concatenate([f.samples, [0.0, 0.0]])
        image = RealSignal2D(uniform_samples(rng, (8, 8)))
        delta_2d = RealSignal2D([[1.0]])
        return max(max_abs_error(conv_spectral_1d(f, delta).samples, padded),
                   max_abs_error(conv_spectral_2d(image, delta_2d).samples, image.samples))

    @check('conv.commutativity', 'convolution is commutative', 1e-12)
    def commutativity(self, rng):
        """Direct path on integer data must agree bit for bit"""
        ints_f = RealSignal1D(rng.integers(-9, 10, size=23).astype(float))
        ints_g = RealSignal1D(rng.integers(-9, 10, size=7).astype(float))
        direct = max_abs_error(conv_direct_1d(ints_f, ints_g).samples, conv_direct_1d(ints_g, ints_f).samples)
        if direct != 0.0:
            return direct
        f, g = _random_1d(rng, 64), _random_1d(rng, 64)
        return max_abs_error(conv_spectral_1d(f, g).samples, conv_spectral_1d(g, f).samples)

    @check('conv.scalar_homogeneity', 'convolution is linear', 1e-12)
    def scalar_homogeneity(self, rng):
        f, g = _random_1d(rng, 64), _random_1d(rng, 64)
        alpha = float(uniform_samples(rng, 1)[0]) * 4.0
        scaled = conv_spectral_1d(RealSignal1D(alpha * f.samples), g).samples
        return max_abs_error(scaled, alpha * conv_spectral_1d(f, g).samples) / scaled.size

    @check('conv.same_mode_window', THEOREM, 1e-10)
    def same_mode_window(self, rng):
        f = RealSignal1D(uniform_samples(rng, 20))
        g = RealSignal1D(uniform_samples(rng, 6))
        plan = ConvPlan.for_signals(f, g, mode='same')
        same = conv_spectral_1d(f, g, plan).samples
        window = plan.window()[0]
        return max_abs_error(same, conv_direct_1d(f, g).samples[window]) / same.size

    @check('conv.pointwise_product_grad', 'back-propagation through the spectral product', 1e-5)
    def product_gradient(self, rng):
        """Analytic gradient of 0.5 * ||ifft(F1 F2)||^2 against Wirtinger finite differences"""
        n = 8
        f1 = uniform_samples(rng, n) + 1j * uniform_samples(rng, n)
        f2 = np.fft.fft(uniform_samples(rng, n))

        def loss(z):
            return 0.5 * float(np.sum(np.abs(np.fft.ifft(z * f2)) ** 2))

        upstream = np.conj(f1 * f2) / (2 * n)
        analytic = pointwise_product_grad(ComplexSpectrum1D(upstream), ComplexSpectrum1D(f2)).coeffs
        return relative_error(analytic, wirtinger_gradient(loss, f1))


def setup(registry):
    registry.add_suite(ConvChecks)
