"""
Closed-form Fourier transforms of activation functions

Angular-frequency convention, F(omega) = integral f(x) e^{-i omega x} dx.

The sigmoid expression still depends on x: it is an antiderivative of the
transform integrand e^{(1 - i omega) x} / (e^x + 1), and it is evaluated
and checked as such. The Heaviside step is only exposed through its
Lorentzian regularization 1 / (beta + i omega).
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from config import ACTIVATION_SETTINGS
from spectral.errors import DomainError
from spectral.hypergeometric import Hyp2F1Params, SeriesControl, hyp2f1
from spectral.quadrature import integrate
from spectral.signals import QuadratureSpec, ensure_finite

logger = logging.getLogger('freq_activations')


@dataclass(frozen=True)
class LorentzianParams:
    beta: float
    omega: float

    def __post_init__(self):
        ensure_finite(np.array([self.beta, self.omega], dtype=float), 'lorentzian')
        if not self.beta > 0:
            raise DomainError(f"beta must be strictly positive, got {self.beta}")


def sigmoid(x):
    """S(x) = 1 / (1 + e^{-x})"""
    return float(expit(ensure_finite(x, 'x')))


def sigmoid_ft_integrand(x, omega):
    """e^{(1 - i omega) x} / (e^x + 1), written as e^{-i omega x} S(x)"""
    ensure_finite(np.array([x, omega], dtype=float), 'argument')
    return complex(np.exp(-1j * omega * x) * expit(x))


def sigmoid_ft_antiderivative(x, omega, ctl=None):
    """
    (i e^{x - i omega x} / (omega + i)) * 2F1(1, 1 - i omega; 2 - i omega; -e^x)

    Its x-derivative is sigmoid_ft_integrand(x, omega).

    Raises:
        DomainError: x >= 0 puts -e^x outside the series disc
    """
    ensure_finite(np.array([x, omega], dtype=float), 'argument')
    if x >= 0:
        raise DomainError(f"series branch needs x < 0, got x = {x}")
    prefactor = 1j * np.exp((1.0 - 1j * omega) * x) / (omega + 1j)
    series = hyp2f1(Hyp2F1Params(1.0, 1.0 - 1j * omega, 2.0 - 1j * omega, -math.exp(x)), ctl)
    return complex(prefactor * series.value)


def sigmoid_ft_spatial_derivative(x, omega):
    """
    d/dx [e^{-i omega x} / (e^{-x} + 1)]
        = e^{x - i omega x} (1 - i omega (e^x + 1)) / (e^x + 1)^2

    Evaluated as e^{-i omega x} S(x) ((1 - S(x)) - i omega), which is the same
    expression without overflow for large x.
    """
    ensure_finite(np.array([x, omega], dtype=float), 'argument')
    s = expit(x)
    return complex(np.exp(-1j * omega * x) * s * ((1.0 - s) - 1j * omega))


def relu_ft(omega, k):
    """
    Transform of the ReLU restricted to (0, k): (e^{-i omega k}(1 + i omega k) - 1) / omega^2

    For |omega| k below the crossover the Taylor branch
    k^2/2 - i omega k^3/3 - omega^2 k^4/8 is used (the closed form is 0/0 at 0).
    """
    ensure_finite(np.array([omega, k], dtype=float), 'argument')
    if not k > 0:
        raise DomainError(f"k must be positive, got {k}")
    theta = omega * k
    if abs(theta) < ACTIVATION_SETTINGS['relu_crossover']:
        return complex(k ** 2 / 2 - omega ** 2 * k ** 4 / 8, -omega * k ** 3 / 3)
    # cos(t) - 1 = -2 sin^2(t/2) keeps the real part free of cancellation
    real = theta * math.sin(theta) - 2.0 * math.sin(theta / 2) ** 2
    imag = theta * math.cos(theta) - math.sin(theta)
    return complex(real, imag) / omega ** 2


def relu_ft_backward_integrand(x, omega):
    """d/dx (x e^{-i omega x}) = e^{-i omega x} (1 - i omega x)"""
    ensure_finite(np.array([x, omega], dtype=float), 'argument')
    return complex(np.exp(-1j * omega * x) * (1.0 - 1j * omega * x))


def heaviside_ft_regularized(params):
    """1 / (beta + i omega), the transform of e^{-beta x} u(x)"""
    return 1.0 / complex(params.beta, params.omega)


def heaviside_ft_parts(params):
    """(beta / (beta^2 + omega^2), -omega / (beta^2 + omega^2))"""
    denom = params.beta ** 2 + params.omega ** 2
    return params.beta / denom, -params.omega / denom


def lorentzian_mass(beta, half_width, spec=None):
    """
    Quadrature of beta / (beta^2 + omega^2) over [-W, W]

    The analytic value is 2 arctan(W / beta), tending to pi as W / beta grows.
    The half line [0, W] is split into dyadic pieces [0, beta], [beta, 2 beta], ...
    so each piece sees a smooth integrand on its own scale; spec supplies the
    panel count and tolerance, its interval is ignored.
    """
    ensure_finite(np.array([beta, half_width], dtype=float), 'argument')
    if not beta > 0 or not half_width > 0:
        raise DomainError(f"beta and half_width must be positive, got {beta}, {half_width}")
    spec = spec or QuadratureSpec(0.0, 1.0)
    lorentz = lambda w: beta / (beta ** 2 + w ** 2)

    edges = [0.0]
    edge = beta
    while edge < half_width:
        edges.append(edge)
        edge *= 2.0
    edges.append(half_width)

    half = sum(integrate(lorentz, spec.over(lo, hi)) for lo, hi in zip(edges[:-1], edges[1:]))
    logger.debug(f"lorentzian mass over {len(edges) - 1} pieces: {2 * half}")
    return float(2.0 * half)
