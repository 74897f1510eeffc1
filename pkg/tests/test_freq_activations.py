import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from spectral.errors import DomainError, NonFiniteError
from spectral.finite_difference import central_difference
from spectral.freq_activations import (
    LorentzianParams,
    heaviside_ft_parts,
    heaviside_ft_regularized,
    lorentzian_mass,
    relu_ft,
    relu_ft_backward_integrand,
    sigmoid,
    sigmoid_ft_antiderivative,
    sigmoid_ft_integrand,
    sigmoid_ft_spatial_derivative,
)
from spectral.hypergeometric import SeriesControl

TIGHT = SeriesControl(rel_tol=1e-14)


@given(st.floats(-30.0, 30.0))
def test_sigmoid_symmetry(x):
    assert abs(sigmoid(x) + sigmoid(-x) - 1.0) < 1e-15


def test_sigmoid_values():
    assert sigmoid(0.0) == 0.5
    assert sigmoid(-800.0) == 0.0
    with pytest.raises(NonFiniteError):
        sigmoid(math.nan)


@given(st.floats(-4.0, -0.5), st.floats(-2.0, 2.0))
@settings(deadline=None, max_examples=50)
def test_sigmoid_antiderivative_differentiates_to_integrand(x, omega):
    measured = central_difference(lambda s: sigmoid_ft_antiderivative(s, omega, TIGHT), x)
    expected = sigmoid_ft_integrand(x, omega)
    assert abs(measured - expected) <= 1e-6 * abs(expected)


def test_sigmoid_antiderivative_needs_negative_x():
    with pytest.raises(DomainError):
        sigmoid_ft_antiderivative(0.0, 1.0)


def test_sigmoid_antiderivative_asymptote():
    x, omega = -40.0, 1.0
    leading = sigmoid_ft_antiderivative(x, omega) / np.exp((1.0 - 1j * omega) * x)
    assert abs(leading - 1j / (omega + 1j)) < 1e-12


def test_sigmoid_spatial_derivative():
    assert abs(sigmoid_ft_spatial_derivative(0.0, 0.0) - 0.25) < 1e-15
    x, omega = 1.3, -0.7
    measured = central_difference(lambda s: np.exp(-1j * omega * s) / (np.exp(-s) + 1), x)
    assert abs(measured - sigmoid_ft_spatial_derivative(x, omega)) < 1e-9


@pytest.mark.parametrize('omega', [-7.5, -1.0, 0.3, 2.0, 6.1])
@pytest.mark.parametrize('k', [0.3, 1.0, 3.0])
def test_relu_matches_scipy_quadrature(omega, k):
    real = quad(lambda x: x * math.cos(omega * x), 0.0, k, epsabs=1e-14, epsrel=1e-13, limit=200)[0]
    imag = quad(lambda x: -x * math.sin(omega * x), 0.0, k, epsabs=1e-14, epsrel=1e-13, limit=200)[0]
    expected = complex(real, imag)
    assert abs(relu_ft(omega, k) - expected) <= 1e-9 * abs(expected)


def test_relu_zero_frequency_and_symmetry():
    assert relu_ft(0.0, 2.0) == complex(2.0, 0.0)
    assert abs(relu_ft(2 * math.pi, 1.0) - 1j / (2 * math.pi)) < 1e-14
    assert abs(relu_ft(-1.7, 0.8) - relu_ft(1.7, 0.8).conjugate()) < 1e-15


@pytest.mark.parametrize('k', [0.5, 1.0, 2.0])
def test_relu_branches_meet_at_crossover(k):
    omega = 1e-4 / k
    assert abs(relu_ft(omega * (1 - 1e-9), k) - relu_ft(omega * (1 + 1e-9), k)) < 1e-9


def test_relu_rejects_non_positive_k():
    with pytest.raises(DomainError):
        relu_ft(1.0, 0.0)


def test_relu_backward_integrand():
    assert relu_ft_backward_integrand(0.0, 3.0) == 1.0
    x, omega = 0.8, 2.2
    measured = central_difference(lambda s: s * np.exp(-1j * omega * s), x)
    assert abs(measured - relu_ft_backward_integrand(x, omega)) < 1e-9


def test_heaviside_examples():
    assert heaviside_ft_regularized(LorentzianParams(1.0, 0.0)) == 1.0
    assert abs(heaviside_ft_regularized(LorentzianParams(1.0, 1.0)) - (0.5 - 0.5j)) < 1e-15


@given(st.floats(0.01, 5.0), st.floats(-10.0, 10.0))
def test_heaviside_parts_agree(beta, omega):
    params = LorentzianParams(beta, omega)
    real, imag = heaviside_ft_parts(params)
    value = heaviside_ft_regularized(params)
    assert abs(value - complex(real, imag)) <= 1e-14 * abs(value)


def test_lorentzian_params_need_positive_beta():
    with pytest.raises(DomainError):
        LorentzianParams(0.0, 1.0)


@given(st.floats(0.05, 5.0), st.floats(0.1, 100.0))
@settings(deadline=None, max_examples=30)
def test_lorentzian_mass_is_arctan(beta, half_width):
    assert abs(lorentzian_mass(beta, half_width) - 2 * math.atan(half_width / beta)) < 1e-6


def test_lorentzian_mass_tends_to_pi():
    assert abs(lorentzian_mass(0.01, 100.0) - math.pi) < 1e-3
    assert lorentzian_mass(1.0, 10.0) < lorentzian_mass(1.0, 20.0) < math.pi


@pytest.mark.parametrize('func, args', [
    (sigmoid_ft_integrand, (math.nan, 0.0)),
    (sigmoid_ft_integrand, (0.0, math.inf)),
    (sigmoid_ft_spatial_derivative, (math.nan, 0.0)),
    (sigmoid_ft_spatial_derivative, (1.0, -math.inf)),
    (relu_ft_backward_integrand, (1.0, math.inf)),
    (relu_ft_backward_integrand, (math.nan, 1.0)),
])
def test_non_finite_arguments_rejected(func, args):
    with pytest.raises(NonFiniteError):
        func(*args)
