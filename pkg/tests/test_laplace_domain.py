import logging
import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import expit

from spectral.errors import DomainError, NonFiniteError, TruncationError
from spectral.finite_difference import central_difference
from spectral.hypergeometric import SeriesControl
from spectral.laplace_domain import (
    CausalSignal,
    LaplacePoint,
    laplace_conv_direct,
    laplace_conv_theorem_check,
    laplace_numeric,
    relu_lt,
    relu_lt_integrand_derivative,
    relu_lt_p_derivative_check,
    relu_lt_printed,
    resolve_horizon,
    sigmoid_lt_antiderivative,
    sigmoid_lt_integrand,
    sigmoid_lt_printed_derivative,
    sigmoid_lt_spatial_derivative,
)

ONE = CausalSignal(lambda t: np.ones_like(t))
RAMP = CausalSignal(lambda t: t)
DECAY = CausalSignal(lambda t: np.exp(-t))


def test_laplace_point_validation():
    with pytest.raises(DomainError):
        LaplacePoint(0.0)
    with pytest.raises(DomainError):
        LaplacePoint(-1.0)
    with pytest.raises(NonFiniteError):
        LaplacePoint(math.nan)


def test_causal_signal_is_zero_outside_support():
    signal = CausalSignal(lambda t: np.ones_like(t), support=2.0)
    assert signal(np.array([-1.0, 0.0, 1.0, 2.0, 3.0])).tolist() == [0, 1, 1, 1, 0]
    with pytest.raises(DomainError):
        CausalSignal(np.cos, support=-1.0)
    with pytest.raises(DomainError):
        CausalSignal(np.cos, horizon=math.inf)


@pytest.mark.parametrize('signal, p, expected', [
    (ONE, 2.0, 0.5),
    (RAMP, 1.0, 1.0),
    (DECAY, 1.5, 0.4),
    (CausalSignal(np.sin), 1.0, 0.5),
])
def test_textbook_transforms(signal, p, expected):
    assert abs(laplace_numeric(signal, LaplacePoint(p)) - expected) < 1e-7


def test_transform_decreases_with_p():
    values = [laplace_numeric(ONE, LaplacePoint(p)) for p in (0.5, 1.0, 2.0, 4.0)]
    assert values == sorted(values, reverse=True)


def test_explicit_horizon_violating_tail_bound():
    with pytest.raises(TruncationError) as excinfo:
        laplace_numeric(CausalSignal(lambda t: np.ones_like(t), horizon=1.0), LaplacePoint(1.0))
    assert excinfo.value.suggested_horizon == 32.0


def test_explicit_horizon_is_used_when_sufficient():
    signal = CausalSignal(lambda t: np.ones_like(t), horizon=30.0)
    assert resolve_horizon(signal, LaplacePoint(1.0)) == 30.0


def test_default_horizon_widening_is_logged(caplog):
    caplog.set_level(logging.INFO, logger='laplace_domain')
    horizon = resolve_horizon(DECAY, LaplacePoint(1.5))
    assert horizon == pytest.approx(2 * 20 / 1.5)
    assert 'widened Laplace horizon' in caplog.text


def test_from_samples_interpolates_linearly():
    signal = CausalSignal.from_samples([0.0, 1.0, 2.0], spacing=0.5)
    assert signal.support == 1.0
    assert signal(np.array([0.25, 0.75, 1.5])).tolist() == [0.5, 1.5, 0.0]
    value = laplace_numeric(signal, LaplacePoint(2.0))
    assert abs(value - 2 * relu_lt(LaplacePoint(2.0), 1.0)) < 1e-9
    with pytest.raises(DomainError):
        CausalSignal.from_samples([1.0], spacing=1.0)


def test_direct_convolution_examples():
    assert abs(laplace_conv_direct(ONE, ONE, 3.0) - 3.0) < 1e-12
    assert abs(laplace_conv_direct(RAMP, ONE, 2.0) - 2.0) < 1e-12
    assert abs(laplace_conv_direct(DECAY, RAMP, 1.0) - math.exp(-1.0)) < 1e-10
    assert laplace_conv_direct(DECAY, RAMP, 0.0) == 0.0
    with pytest.raises(DomainError):
        laplace_conv_direct(ONE, ONE, -1.0)


@pytest.mark.parametrize('f1, f2, expected', [
    (ONE, ONE, 0.25),
    (DECAY, RAMP, 1 / 12),
    (RAMP, RAMP, 0.0625),
])
def test_convolution_theorem_at_two(f1, f2, expected):
    lhs, rhs = laplace_conv_theorem_check(f1, f2, LaplacePoint(2.0))
    assert lhs == pytest.approx(expected, rel=1e-6)
    assert abs(lhs - rhs) <= 1e-4 * max(abs(lhs), 1.0)


def test_sigmoid_antiderivative_differentiates_to_integrand():
    for x, p in [(-2.0, 0.5), (-3.0, 3.5), (-1.0, 0.2)]:
        point = LaplacePoint(p)
        measured = central_difference(
            lambda s: sigmoid_lt_antiderivative(s, point, SeriesControl(rel_tol=1e-14)), x)
        assert measured == pytest.approx(sigmoid_lt_integrand(x, point), rel=1e-6)


@pytest.mark.parametrize('x, p', [(0.0, 0.5), (-1.0, 1.0), (-1.0, 2.0), (-1.0, 3.0)])
def test_sigmoid_antiderivative_domain(x, p):
    with pytest.raises(DomainError):
        sigmoid_lt_antiderivative(x, LaplacePoint(p))


def test_sigmoid_spatial_derivative_sign():
    point = LaplacePoint(1.0)
    assert sigmoid_lt_spatial_derivative(0.0, point) == pytest.approx(-0.25)
    assert sigmoid_lt_printed_derivative(0.0, point) == pytest.approx(0.25)


@pytest.mark.parametrize('x, p', [(-2.0, 0.3), (0.0, 1.0), (1.5, 2.5), (4.0, 0.1)])
def test_sigmoid_spatial_derivative_matches_finite_difference(x, p):
    measured = central_difference(lambda s: math.exp(-p * s) * expit(s), x)
    assert measured == pytest.approx(sigmoid_lt_spatial_derivative(x, p), rel=1e-7, abs=1e-10)


def test_sigmoid_spatial_derivative_at_zero_p_is_logistic():
    for x in (-3.0, 0.0, 2.0):
        s = expit(x)
        assert sigmoid_lt_spatial_derivative(x, 0.0) == pytest.approx(s * (1 - s), rel=1e-14)


@pytest.mark.parametrize('p', [0.25, 1.0, 3.0, 8.0])
@pytest.mark.parametrize('k', [0.25, 1.0, 4.0])
def test_relu_lt_matches_scipy(p, k):
    expected = quad(lambda t: t * math.exp(-p * t), 0.0, k, epsabs=1e-15, epsrel=1e-13)[0]
    assert relu_lt(LaplacePoint(p), k) == pytest.approx(expected, rel=1e-10)


def test_relu_lt_limits_and_branches():
    assert relu_lt(LaplacePoint(1e-12), 1.0) == pytest.approx(0.5, abs=1e-11)
    assert relu_lt(LaplacePoint(1.0), 60.0) == pytest.approx(1.0, abs=1e-15)
    below = relu_lt(LaplacePoint(1e-4 * (1 - 1e-9)), 1.0)
    above = relu_lt(LaplacePoint(1e-4 * (1 + 1e-9)), 1.0)
    assert abs(below - above) < 1e-9
    with pytest.raises(DomainError):
        relu_lt(LaplacePoint(1.0), 0.0)


def test_relu_lt_printed_form_differs():
    point = LaplacePoint(1.0)
    assert relu_lt(point, 1.0) == pytest.approx(1 - 2 / math.e)
    assert relu_lt_printed(point, 1.0) == pytest.approx(-(2 / math.e + 1))


def test_relu_lt_integrand_derivative():
    point = LaplacePoint(2.0)
    assert relu_lt_integrand_derivative(0.0, point) == 1.0
    assert relu_lt_integrand_derivative(0.5, point) == 0.0
    measured = central_difference(lambda s: s * math.exp(-2.0 * s), 1.3)
    assert measured == pytest.approx(relu_lt_integrand_derivative(1.3, point), rel=1e-8)


def test_relu_lt_p_derivative_comparison():
    analytic_fd, printed_form, printed_fd = relu_lt_p_derivative_check(LaplacePoint(1.0), 1.0)
    assert analytic_fd == pytest.approx(5 / math.e - 2, rel=1e-6)
    # the printed p-derivative belongs to the printed transform
    assert printed_form == pytest.approx(printed_fd, rel=1e-6)
    assert printed_form != pytest.approx(analytic_fd, rel=1e-2)


def test_relu_lt_p_derivative_small_p_limit():
    analytic_fd, _, _ = relu_lt_p_derivative_check(LaplacePoint(1e-5), 1.0)
    assert analytic_fd == pytest.approx(-1 / 3, abs=1e-5)


@pytest.mark.parametrize('func, args', [
    (sigmoid_lt_integrand, (math.nan, LaplacePoint(1.0))),
    (sigmoid_lt_spatial_derivative, (math.nan, 1.0)),
    (sigmoid_lt_spatial_derivative, (0.0, math.inf)),
    (sigmoid_lt_printed_derivative, (math.inf, LaplacePoint(1.0))),
    (relu_lt_integrand_derivative, (math.nan, LaplacePoint(1.0))),
])
def test_non_finite_arguments_rejected(func, args):
    with pytest.raises(NonFiniteError):
        func(*args)


def test_scalar_only_signal_functions():
    decay = CausalSignal(lambda t: math.exp(-t))
    assert abs(laplace_numeric(decay, LaplacePoint(1.5)) - 0.4) < 1e-7
    clipped = CausalSignal(lambda t: t if t < 1.0 else 1.0, support=4.0)
    p = 2.0
    expected = relu_lt(LaplacePoint(p), 1.0) + (math.exp(-p) - math.exp(-4 * p)) / p
    assert abs(laplace_numeric(clipped, LaplacePoint(p)) - expected) < 1e-8
