"""
Loss Checks - binary cross-entropy, its exponential identity and antiderivative
"""
import math

import numpy as np

from spectral.finite_difference import central_difference, relative_error
from spectral.freq_loss import BceInput, bce, bce_exp_identity_check, bce_ft_antiderivative
from suites.registry import Suite, check

BCE = 'binary cross-entropy'
EXPONENTIAL = 'cross-entropy as an exponential'
FREQUENCY = 'frequency form of cross-entropy'

P_GRID = np.linspace(0.01, 0.99, 99)


class LossChecks(Suite):
    name = 'loss'

    @check('loss.bce_examples', BCE, 1e-15)
    def bce_examples(self, rng):
        return max(abs(bce(BceInput(1, 0.5)) - math.log(2)),
                   abs(bce(BceInput(0, 0.5)) - math.log(2)),
                   abs(bce(BceInput(1, 0.9)) + math.log(0.9)))

    @check('loss.bce_label_symmetry', BCE, 1e-300)
    def bce_label_symmetry(self, rng):
        """bce(1, p) == bce(0, 1 - p) bit for bit on dyadic p"""
        worst = 0.0
        for k in range(1, 64):
            p = k / 64
            worst = max(worst, abs(bce(BceInput(1, p)) - bce(BceInput(0, 1.0 - p))))
        return worst

    @check('loss.bce_nonnegative', BCE, 0.5)
    def bce_nonnegative(self, rng):
        """Count of negative values over the grid"""
        return float(sum(1 for y in (0, 1) for p in P_GRID if bce(BceInput(y, p)) < 0))

    @check('loss.exp_identity', EXPONENTIAL, 1e-12)
    def exp_identity(self, rng):
        worst = 0.0
        for y in (0, 1):
            for p in P_GRID:
                lhs, rhs = bce_exp_identity_check(BceInput(y, p))
                worst = max(worst, abs(lhs - rhs) / rhs)
        return worst

    @check('loss.exp_identity_examples', EXPONENTIAL, 1e-12)
    def exp_identity_examples(self, rng):
        lhs, rhs = bce_exp_identity_check(BceInput(0, 0.3))
        half_lhs, half_rhs = bce_exp_identity_check(BceInput(1, 0.5))
        return max(abs(lhs - 1 / 0.7), abs(rhs - 1 / 0.7), abs(half_lhs - 2.0), abs(half_rhs - 2.0))

    @check('loss.antiderivative', FREQUENCY, 1e-6)
    def antiderivative(self, rng):
        """x-derivative equals p^-y (1 - p)^(y - 1) e^{-i omega x} on a 5 x 5 grid"""
        worst = 0.0
        inp = BceInput(int(rng.integers(0, 2)), float(rng.uniform(0.05, 0.95)))
        for x in np.linspace(-2.0, 2.0, 5):
            for omega in (-3.0, -1.0, 0.5, 2.0, 4.0):
                measured = central_difference(lambda s: bce_ft_antiderivative(s, omega, inp), x)
                expected = inp.exp_weight * np.exp(-1j * omega * x)
                worst = max(worst, relative_error(measured, expected))
        inp = BceInput(1, 0.6)
        measured = central_difference(lambda s: bce_ft_antiderivative(s, 2.0, inp), 0.3)
        return max(worst, relative_error(measured, np.exp(-0.6j) / 0.6))

    @check('loss.antiderivative_values', FREQUENCY, 1e-14)
    def antiderivative_values(self, rng):
        at_origin = bce_ft_antiderivative(0.0, 1.0, BceInput(1, 1 / math.e))
        inp = BceInput(0, 0.4)
        magnitudes = [abs(bce_ft_antiderivative(x, 1.5, inp)) for x in np.linspace(-3, 3, 7)]
        return max(abs(at_origin - math.e * 1j) / math.e, (max(magnitudes) - min(magnitudes)) / magnitudes[0])


def setup(registry):
    registry.add_suite(LossChecks)
