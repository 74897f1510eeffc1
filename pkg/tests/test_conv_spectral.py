import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.signal import convolve

from spectral.conv_spectral import (
    ConvPlan,
    conv_direct_1d,
    conv_direct_2d,
    conv_spectral_1d,
    conv_spectral_2d,
    pointwise_product_grad,
)
from spectral.errors import DimensionError, LengthError
from spectral.finite_difference import wirtinger_gradient
from spectral.signals import ComplexSpectrum1D, RealSignal1D, RealSignal2D, seeded_generator


@pytest.mark.parametrize('f, g, expected', [
    ([1, 0, 0], [2, 3, 4], [2, 3, 4, 0, 0]),
    ([1, 1], [1, 1], [1, 2, 1]),
    ([1, 2], [3, 4, 5], [3, 10, 13, 10]),
])
def test_direct_examples(f, g, expected):
    assert conv_direct_1d(RealSignal1D(f), RealSignal1D(g)).samples.tolist() == expected


def test_direct_2d_example():
    ones = RealSignal2D(np.ones((2, 2)))
    assert conv_direct_2d(ones, ones).samples.tolist() == [[1, 2, 1], [2, 4, 2], [1, 2, 1]]


@given(st.integers(1, 128), st.integers(1, 128), st.integers(0, 2 ** 32 - 1))
@settings(deadline=None, max_examples=50)
def test_spectral_matches_direct_1d(n, m, seed):
    rng = seeded_generator(seed, 'conv1d')
    f = RealSignal1D(rng.uniform(-1, 1, n))
    g = RealSignal1D(rng.uniform(-1, 1, m))
    direct = conv_direct_1d(f, g).samples
    assert np.allclose(direct, convolve(f.samples, g.samples, method='direct'), atol=1e-12)
    assert np.max(np.abs(conv_spectral_1d(f, g).samples - direct)) <= 1e-10 * (n + m - 1)


@given(st.tuples(st.integers(1, 12), st.integers(1, 12)),
       st.tuples(st.integers(1, 12), st.integers(1, 12)),
       st.integers(0, 2 ** 32 - 1))
@settings(deadline=None, max_examples=20)
def test_spectral_matches_direct_2d(f_shape, g_shape, seed):
    rng = seeded_generator(seed, 'conv2d')
    f = RealSignal2D(rng.uniform(-1, 1, f_shape))
    g = RealSignal2D(rng.uniform(-1, 1, g_shape))
    direct = conv_direct_2d(f, g).samples
    assert np.allclose(direct, convolve(f.samples, g.samples, method='direct'), atol=1e-12)
    assert np.max(np.abs(conv_spectral_2d(f, g).samples - direct)) <= 1e-10 * direct.size


def test_same_mode_keeps_input_length(rng):
    f = RealSignal1D(rng.uniform(-1, 1, 20))
    g = RealSignal1D(rng.uniform(-1, 1, 5))
    plan = ConvPlan.for_signals(f, g, mode='same')
    same = conv_spectral_1d(f, g, plan)
    assert same.n == 20
    assert np.allclose(same.samples, np.convolve(f.samples, g.samples, mode='same'), atol=1e-12)


def test_origins_add():
    f = RealSignal1D([1.0, 2.0], origin=1.5)
    g = RealSignal1D([1.0], origin=-0.5)
    assert conv_direct_1d(f, g).origin == 1.0
    assert conv_spectral_1d(f, g).origin == 1.0


def test_plan_validation():
    assert ConvPlan.for_lengths((5,), (4,)).padded_lens == (8,)
    with pytest.raises(LengthError):
        ConvPlan((5,), (4,), (4,))
    with pytest.raises(LengthError):
        ConvPlan((5,), (4,), (12,))
    with pytest.raises(DimensionError):
        ConvPlan.for_lengths((5,), (4,), mode='valid')


def test_plan_must_match_operands():
    plan = ConvPlan.for_lengths((4,), (4,))
    with pytest.raises(LengthError):
        conv_spectral_1d(RealSignal1D(np.ones(3)), RealSignal1D(np.ones(4)), plan)


def test_pointwise_product_grad_matches_finite_differences(rng):
    n = 8
    f1 = rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)
    f2 = np.fft.fft(rng.uniform(-1, 1, n))

    def loss(z):
        return 0.5 * float(np.sum(np.abs(np.fft.ifft(z * f2)) ** 2))

    upstream = ComplexSpectrum1D(np.conj(f1 * f2) / (2 * n))
    analytic = pointwise_product_grad(upstream, ComplexSpectrum1D(f2)).coeffs
    assert np.allclose(analytic, wirtinger_gradient(loss, f1), atol=1e-7)


def test_pointwise_product_grad_length_mismatch():
    with pytest.raises(LengthError):
        pointwise_product_grad(ComplexSpectrum1D(np.ones(4)), ComplexSpectrum1D(np.ones(8)))
