"""
Activation Checks - sigmoid via 2F1, ReLU on (0, k), regularized Heaviside
"""
import math

import numpy as np
from scipy.special import expit

from spectral.finite_difference import central_difference, relative_error
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
from spectral.hypergeometric import Hyp2F1Params, SeriesControl, hyp2f1
from spectral.quadrature import continuous_ft_quadrature
from spectral.signals import QuadratureSpec, uniform_samples
from suites.registry import Suite, check

SIGMOID = 'Fourier transform of the sigmoid'
RELU = 'Fourier transform of the ReLU on (0, k)'
HEAVISIDE = 'Heaviside step as a Lorentzian limit'

TIGHT_SERIES = SeriesControl(rel_tol=1e-14)


def _series_by_products(a, b, c, z, terms=200):
    """Each 2F1 term rebuilt from its own Pochhammer products, summed with fsum"""
    re_parts, im_parts = [1.0], [0.0]
    for n in range(1, terms):
        term = complex(z) ** n / math.factorial(n)
        for j in range(n):
            term *= (a + j) * (b + j) / (c + j)
        re_parts.append(term.real)
        im_parts.append(term.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))


class ActivationChecks(Suite):
    """Closed forms checked by finite differences and quadrature"""

    name = 'activations'

    @check('act.hyp2f1_log_identity', 'Gauss hypergeometric series', 1e-10)
    def hyp2f1_log_identity(self, rng):
        value = hyp2f1(Hyp2F1Params(1, 1, 2, 0.5)).value
        return abs(value - (-math.log(0.5) / 0.5)) / (-math.log(0.5) / 0.5)

    @check('act.hyp2f1_trivial', 'Gauss hypergeometric series', 1e-15)
    def hyp2f1_trivial(self, rng):
        """z = 0 and a = 0 both leave only the leading term"""
        errors = [abs(hyp2f1(Hyp2F1Params(2.5, -1.5, 3.0, 0.0)).value - 1.0)]
        for z in uniform_samples(rng, 10) * 0.99:
            errors.append(abs(hyp2f1(Hyp2F1Params(0.0, 1.3, 2.7, z)).value - 1.0))
        return max(errors)

    @check('act.hyp2f1_complex_parameters', 'Gauss hypergeometric series', 1e-12)
    def hyp2f1_complex_parameters(self, rng):
        a, b, c, z = 1.0, 1.0 - 1.0j, 2.0 - 1.0j, -0.1
        value = hyp2f1(Hyp2F1Params(a, b, c, z), TIGHT_SERIES).value
        reference = _series_by_products(a, b, c, z, terms=40)
        return abs(value - reference) / abs(reference)

    @check('act.sigmoid_symmetry', 'logistic sigmoid', 1e-14)
    def sigmoid_symmetry(self, rng):
        xs = uniform_samples(rng, 50) * 20.0
        errors = [abs(sigmoid(x) + sigmoid(-x) - 1.0) for x in xs]
        errors.append(abs(sigmoid(0.0) - 0.5))
        errors.append(abs(sigmoid_ft_integrand(0.0, 0.0) - 0.5))
        return max(errors)

    @check('act.sigmoid_antiderivative', SIGMOID, 1e-6)
    def sigmoid_antiderivative(self, rng):
        """x-derivative of the series expression equals the transform integrand"""
        worst = 0.0
        for omega in (0.0, 0.5, -0.5, 2.0, -2.0):
            for x in np.linspace(-5.0, -0.5, 20):
                antiderivative = lambda s: sigmoid_ft_antiderivative(s, omega, TIGHT_SERIES)
                measured = central_difference(antiderivative, x, h=1e-5)
                worst = max(worst, relative_error(measured, sigmoid_ft_integrand(x, omega)))
        return worst

    @check('act.sigmoid_antiderivative_examples', SIGMOID, 1e-6)
    def sigmoid_antiderivative_examples(self, rng):
        at_minus_one = central_difference(lambda s: sigmoid_ft_antiderivative(s, 0.0, TIGHT_SERIES), -1.0)
        logistic = math.exp(-1.0) / (math.exp(-1.0) + 1.0)
        x, omega = -40.0, 1.0
        leading = sigmoid_ft_antiderivative(x, omega) / np.exp((1.0 - 1j * omega) * x)
        return max(relative_error(at_minus_one, logistic), abs(leading - 1j / (omega + 1j)))

    @check('act.sigmoid_spatial_derivative', SIGMOID, 1e-6)
    def sigmoid_spatial_derivative(self, rng):
        errors = [abs(sigmoid_ft_spatial_derivative(0.0, 0.0) - 0.25)]
        for x, omega in zip(uniform_samples(rng, 20) * 6.0, uniform_samples(rng, 20) * 4.0):
            kernel = lambda s: np.exp(-1j * omega * s) * expit(s)
            measured = central_difference(kernel, x)
            errors.append(relative_error(measured, sigmoid_ft_spatial_derivative(x, omega)))
            s = expit(x)
            errors.append(abs(sigmoid_ft_spatial_derivative(x, 0.0) - s * (1.0 - s)))
        return max(errors)

    @check('act.relu_matches_quadrature', RELU, 1e-8)
    def relu_matches_quadrature(self, rng):
        worst = 0.0
        for omega in np.linspace(-7.5, 7.5, 10):
            for k in np.linspace(0.3, 3.0, 10):
                spec = QuadratureSpec(0.0, k, target_rel_tol=1e-12)
                numeric = continuous_ft_quadrature(lambda x: x, omega, spec)
                worst = max(worst, relative_error(relu_ft(omega, k), numeric))
        return worst

    @check('act.relu_conjugate_symmetry', RELU, 1e-13)
    def relu_conjugate_symmetry(self, rng):
        pairs = zip(uniform_samples(rng, 20) * 8.0, rng.uniform(0.1, 3.0, 20))
        return max(abs(relu_ft(-omega, k) - np.conj(relu_ft(omega, k))) for omega, k in pairs)

    @check('act.relu_branch_continuity', RELU, 1e-9)
    def relu_branch_continuity(self, rng):
        """Series and closed form on either side of |omega| k = 1e-4"""
        worst = 0.0
        for k in (0.5, 1.0, 2.0):
            omega = 1e-4 / k
            below = relu_ft(omega * (1 - 1e-9), k)
            above = relu_ft(omega * (1 + 1e-9), k)
            worst = max(worst, abs(below - above))
        return worst

    @check('act.relu_zero_frequency', RELU, 1e-14)
    def relu_zero_frequency(self, rng):
        errors = [abs(relu_ft(0.0, k) - k ** 2 / 2) for k in (0.5, 1.0, 3.0)]
        errors.append(abs(relu_ft(2 * math.pi, 1.0) - 1j / (2 * math.pi)))
        return max(errors)

    @check('act.relu_backward_integrand', RELU, 1e-6)
    def relu_backward_integrand(self, rng):
        errors = [abs(relu_ft_backward_integrand(0.0, 3.0) - 1.0), abs(relu_ft_backward_integrand(2.0, 0.0) - 1.0)]
        for x, omega in zip(uniform_samples(rng, 20) * 3.0, uniform_samples(rng, 20) * 5.0):
            measured = central_difference(lambda s: s * np.exp(-1j * omega * s), x)
            errors.append(relative_error(measured, relu_ft_backward_integrand(x, omega)))
        return max(errors)

    @check('act.heaviside_split', HEAVISIDE, 1e-14)
    def heaviside_split(self, rng):
        errors = [abs(heaviside_ft_regularized(LorentzianParams(1.0, 0.0)) - 1.0),
                  abs(heaviside_ft_regularized(LorentzianParams(1.0, 1.0)) - (0.5 - 0.5j))]
        for beta, omega in zip(rng.uniform(0.01, 5.0, 20), uniform_samples(rng, 20) * 10.0):
            params = LorentzianParams(beta, omega)
            real, imag = heaviside_ft_parts(params)
            errors.append(relative_error(heaviside_ft_regularized(params), complex(real, imag)))
        return max(errors)

    @check('act.lorentzian_mass_arctan', HEAVISIDE, 1e-6)
    def lorentzian_mass_arctan(self, rng):
        return max(abs(lorentzian_mass(0.1, 50.0) - 2 * math.atan(500.0)),
                   abs(lorentzian_mass(1.0, 1.0) - math.pi / 2))

    @check('act.lorentzian_mass_limit', HEAVISIDE, 1e-3)
    def lorentzian_mass_limit(self, rng):
        return abs(lorentzian_mass(0.01, 100.0) - math.pi)

    @check('act.lorentzian_mass_monotone', HEAVISIDE, 0.5)
    def lorentzian_mass_monotone(self, rng):
        """Number of widths where the mass fails to grow or exceeds pi"""
        masses = [lorentzian_mass(1.0, 2.0 ** e) for e in range(11)]
        growing = sum(1 for a, b in zip(masses, masses[1:]) if not b > a)
        bounded = sum(1 for m in masses if m > math.pi)
        return float(growing + bounded)


def setup(registry):
    registry.add_suite(ActivationChecks)
