"""
Laplace Checks - numeric transform, convolution theorem, sigmoid and ReLU forms

Two checks are informational (tolerance inf): they record how far the
printed closed forms sit from the verified ones.
"""
import math

import numpy as np
from scipy.special import expit

from spectral.finite_difference import central_difference, relative_error
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
    sigmoid_lt_antiderivative,
    sigmoid_lt_integrand,
    sigmoid_lt_printed_derivative,
    sigmoid_lt_spatial_derivative,
)
from spectral.signals import QuadratureSpec, uniform_samples
from suites.registry import INFORMATIONAL, CheckOutcome, Suite, check

TRANSFORM = 'Laplace transform over real p'
CONVOLUTION = 'Laplace convolution theorem'
SIGMOID = 'Laplace transform of the sigmoid'
RELU = 'Laplace transform of the ReLU on (0, k)'

TIGHT = QuadratureSpec(0.0, 1.0, target_rel_tol=1e-12)
TIGHT_SERIES = SeriesControl(rel_tol=1e-14)

ONE = CausalSignal(lambda t: np.ones_like(t))
RAMP = CausalSignal(lambda t: t)
DECAY = CausalSignal(lambda t: np.exp(-t))
CONV_PAIRS = {
    'one*one': (ONE, ONE, lambda p: 1 / p ** 2),
    'decay*ramp': (DECAY, RAMP, lambda p: 1 / ((p + 1) * p ** 2)),
    'ramp*ramp': (RAMP, RAMP, lambda p: 1 / p ** 4),
}


class LaplaceChecks(Suite):
    """The all-real transform path"""

    name = 'laplace'

    @check('lap.textbook_transforms', TRANSFORM, 1e-7)
    def textbook_transforms(self, rng):
        one = CausalSignal(lambda t: np.ones_like(t), horizon=20.0)
        ramp = CausalSignal(lambda t: t, horizon=40.0)
        return max(abs(laplace_numeric(one, LaplacePoint(2.0)) - 0.5),
                   abs(laplace_numeric(ramp, LaplacePoint(1.0)) - 1.0),
                   abs(laplace_numeric(DECAY, LaplacePoint(1.5)) - 0.4))

    @check('lap.linearity', TRANSFORM, 1e-10)
    def linearity(self, rng):
        alpha, beta = uniform_samples(rng, 2) * 3.0
        f1 = CausalSignal(np.cos, support=4.0)
        f2 = CausalSignal(lambda t: t ** 2, support=4.0)
        combined = CausalSignal(lambda t: alpha * np.cos(t) + beta * t ** 2, support=4.0)
        point = LaplacePoint(0.7)
        separate = alpha * laplace_numeric(f1, point, TIGHT) + beta * laplace_numeric(f2, point, TIGHT)
        return abs(laplace_numeric(combined, point, TIGHT) - separate)

    @check('lap.monotone_decay', TRANSFORM, 0.5)
    def monotone_decay(self, rng):
        """Violations of F(p) nonincreasing in p for a nonnegative signal"""
        f = CausalSignal(lambda t: 1.0 + t * np.exp(-t))
        values = [laplace_numeric(f, LaplacePoint(p)) for p in (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)]
        return float(sum(1 for a, b in zip(values, values[1:]) if b > a))

    @check('lap.conv_direct', 'Laplace convolution integral', 1e-9)
    def conv_direct(self, rng):
        return max(abs(laplace_conv_direct(ONE, ONE, 3.0) - 3.0),
                   abs(laplace_conv_direct(RAMP, ONE, 2.0) - 2.0),
                   abs(laplace_conv_direct(DECAY, RAMP, 1.0) - math.exp(-1.0)),
                   abs(laplace_conv_direct(DECAY, RAMP, 0.0)))

    @check('lap.conv_theorem', CONVOLUTION, 1e-4)
    def conv_theorem(self, rng):
        """Three pairs at p in {0.5, 1, 2, 5}: |lhs - rhs| / max(|lhs|, 1)"""
        worst = 0.0
        for f1, f2, _ in CONV_PAIRS.values():
            for p in (0.5, 1.0, 2.0, 5.0):
                lhs, rhs = laplace_conv_theorem_check(f1, f2, LaplacePoint(p))
                worst = max(worst, abs(lhs - rhs) / max(abs(lhs), 1.0))
        return worst

    @check('lap.conv_theorem_textbook', CONVOLUTION, 1e-6)
    def conv_theorem_textbook(self, rng):
        worst = 0.0
        for f1, f2, expected in CONV_PAIRS.values():
            lhs, _ = laplace_conv_theorem_check(f1, f2, LaplacePoint(2.0))
            worst = max(worst, abs(lhs - expected(2.0)) / expected(2.0))
        return worst

    @check('lap.sigmoid_antiderivative', SIGMOID, 1e-6)
    def sigmoid_antiderivative(self, rng):
        cases = [(-2.0, 0.5), (-3.0, 3.5)]
        cases += list(zip(rng.uniform(-5.0, -0.5, 10), rng.uniform(0.1, 0.9, 10)))
        worst = 0.0
        for x, p in cases:
            point = LaplacePoint(p)
            measured = central_difference(lambda s: sigmoid_lt_antiderivative(s, point, TIGHT_SERIES), x)
            worst = max(worst, relative_error(measured, sigmoid_lt_integrand(x, point)))
        return worst

    @check('lap.sigmoid_asymptote', SIGMOID, 1e-12)
    def sigmoid_asymptote(self, rng):
        x, p = -40.0, 0.5
        ratio = sigmoid_lt_antiderivative(x, LaplacePoint(p)) / math.exp((1 - p) * x)
        return abs(ratio - 1 / (1 - p)) * (1 - p)

    @check('lap.sigmoid_spatial_derivative', SIGMOID, 1e-6)
    def sigmoid_spatial_derivative(self, rng):
        errors = []
        for x, p in zip(uniform_samples(rng, 20) * 5.0, rng.uniform(0.0, 4.0, 20)):
            measured = central_difference(lambda s: math.exp(-p * s) * expit(s), x)
            kernel = math.exp(-p * x) * expit(x)
            errors.append(relative_error(measured, sigmoid_lt_spatial_derivative(x, p), floor=kernel))
        for x in np.linspace(-4.0, 4.0, 9):
            s = expit(x)
            errors.append(abs(sigmoid_lt_spatial_derivative(x, 0.0) - s * (1.0 - s)))
        return max(errors)

    @check('lap.sigmoid_printed_derivative', SIGMOID, INFORMATIONAL)
    def sigmoid_printed_derivative(self, rng):
        """Printed spatial derivative against the verified one at x = 0, p = 1"""
        point = LaplacePoint(1.0)
        printed = sigmoid_lt_printed_derivative(0.0, point)
        verified = sigmoid_lt_spatial_derivative(0.0, point)
        return CheckOutcome(abs(printed - verified),
                            f"printed {printed:.6g} vs verified {verified:.6g}: opposite sign")

    @check('lap.relu_matches_quadrature', RELU, 1e-8)
    def relu_matches_quadrature(self, rng):
        worst = 0.0
        for p in np.geomspace(0.25, 8.0, 10):
            point = LaplacePoint(p)
            for k in np.linspace(0.25, 4.0, 10):
                numeric = laplace_numeric(CausalSignal(lambda t: t, support=k), point, TIGHT)
                worst = max(worst, relative_error(relu_lt(point, k), numeric))
        return worst

    @check('lap.relu_limits', RELU, 1e-9)
    def relu_limits(self, rng):
        small = relu_lt(LaplacePoint(1e-12), 1.0)
        large = relu_lt(LaplacePoint(1.0), 60.0)
        return max(abs(small - 0.5), abs(large - 1.0))

    @check('lap.relu_printed_form', RELU, INFORMATIONAL)
    def relu_printed_form(self, rng):
        """Relative distance of the printed transform from the verified one at p = k = 1"""
        point = LaplacePoint(1.0)
        verified, printed = relu_lt(point, 1.0), relu_lt_printed(point, 1.0)
        return CheckOutcome(abs(printed - verified) / abs(verified),
                            f"printed {printed:.6g} vs verified {verified:.6g}")

    @check('lap.relu_integrand_derivative', RELU, 1e-6)
    def relu_integrand_derivative(self, rng):
        point = LaplacePoint(2.0)
        errors = [abs(relu_lt_integrand_derivative(0.0, point) - 1.0),
                  abs(relu_lt_integrand_derivative(0.5, point))]
        for x, p in zip(rng.uniform(0.0, 4.0, 20), rng.uniform(0.1, 5.0, 20)):
            point = LaplacePoint(p)
            measured = central_difference(lambda s: s * math.exp(-p * s), x)
            errors.append(relative_error(measured, relu_lt_integrand_derivative(x, point), floor=math.exp(-p * x)))
        return max(errors)

    @check('lap.relu_p_derivative_limit', RELU, 1e-5)
    def relu_p_derivative_limit(self, rng):
        """Finite-difference p-derivative tends to -k^3/3 as pk -> 0"""
        k = 1.0
        analytic_fd, _, _ = relu_lt_p_derivative_check(LaplacePoint(1e-5), k)
        return abs(analytic_fd + k ** 3 / 3)

    @check('lap.relu_p_derivative_printed', RELU, INFORMATIONAL)
    def relu_p_derivative_printed(self, rng):
        """Printed p-derivative against finite differences of both transforms"""
        notes = []
        worst = 0.0
        for p, k in ((1.0, 1.0), (2.0, 0.5)):
            analytic_fd, printed_form, printed_fd = relu_lt_p_derivative_check(LaplacePoint(p), k)
            gap = abs(printed_form - analytic_fd) / abs(analytic_fd)
            worst = max(worst, gap)
            notes.append(f"p={p:g} k={k:g}: fd {analytic_fd:.6g}, printed {printed_form:.6g}, "
                         f"fd of printed transform {printed_fd:.6g}")
        return CheckOutcome(worst, '; '.join(notes))


def setup(registry):
    registry.add_suite(LaplaceChecks)
