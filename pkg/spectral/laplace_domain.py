"""
Laplace transforms over real p > 0

Everything here is real arithmetic: the transform kernel e^{-pt} replaces
the complex exponential of the Fourier path. Complex p and the inverse
transform are not provided.

Two printed closed forms disagree with quadrature by a sign: the ReLU
transform on (0, k) and the spatial derivative of the sigmoid kernel. The
verified forms are what the public functions return; the printed forms are
kept alongside (``*_printed``) so reports can show the discrepancy.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np
from scipy.integrate import simpson
from scipy.special import expit

from config import ACTIVATION_SETTINGS, LAPLACE_SETTINGS
from spectral.errors import DomainError, TruncationError
from spectral.hypergeometric import Hyp2F1Params, hyp2f1
from spectral.quadrature import evaluate_on_grid, integrate
from spectral.signals import QuadratureSpec, ensure_finite

logger = logging.getLogger('laplace_domain')


@dataclass(frozen=True)
class LaplacePoint:
    p: float

    def __post_init__(self):
        ensure_finite(self.p, 'p')
        if not self.p > 0:
            raise DomainError(f"p must be strictly positive, got {self.p}")


@dataclass(frozen=True)
class CausalSignal:
    """
    f(t) for t >= 0, zero before the origin

    support: f vanishes beyond it (integrate on [0, support], no tail check)
    horizon: explicit truncation horizon for infinite support (tail-checked)
    scale:   characteristic width used for the default horizon
    """

    func: Callable
    support: Optional[float] = None
    horizon: Optional[float] = None
    scale: float = 1.0

    def __post_init__(self):
        for name in ('support', 'horizon'):
            value = getattr(self, name)
            if value is not None and not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be positive and finite, got {value}")
        if not self.scale > 0:
            raise DomainError(f"scale must be positive, got {self.scale}")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        values = np.broadcast_to(np.asarray(evaluate_on_grid(self.func, t), dtype=float), t.shape)
        inside = t >= 0
        if self.support is not None:
            inside &= t <= self.support
        return np.where(inside, values, 0.0)

    @classmethod
    def from_samples(cls, samples, spacing):
        """Linear interpolation of samples[k] at t = k * spacing"""
        samples = ensure_finite(np.asarray(samples, dtype=float), 'samples')
        if samples.size < 2 or not spacing > 0:
            raise DomainError("need at least two samples and a positive spacing")
        grid = spacing * np.arange(samples.size)
        return cls(lambda t: np.interp(t, grid, samples, left=0.0, right=0.0),
                   support=float(grid[-1]), scale=float(grid[-1]))


def tail_bound(signal, p, horizon):
    """e^{-pT} * max |f| on [0, T], sampled"""
    t = np.linspace(0.0, horizon, 1025)
    return math.exp(-p * horizon) * float(np.max(np.abs(signal(t))))


def _widen_horizon(signal, p, start):
    """Smallest doubling of start meeting the tail tolerance, or None"""
    horizon = start
    cap = start * LAPLACE_SETTINGS['horizon_cap_factor']
    while horizon <= cap:
        if tail_bound(signal, p, horizon) <= LAPLACE_SETTINGS['tail_tol']:
            return horizon
        horizon *= 2.0
    return None


def resolve_horizon(signal, point):
    """
    Upper integration limit for laplace_numeric

    Raises:
        TruncationError: explicit horizon violates the tail bound
            (suggested_horizon holds a doubling that satisfies it, if any)
    """
    p = point.p
    if signal.support is not None:
        return signal.support
    if signal.horizon is not None:
        bound = tail_bound(signal, p, signal.horizon)
        if bound > LAPLACE_SETTINGS['tail_tol']:
            suggested = _widen_horizon(signal, p, signal.horizon)
            raise TruncationError(
                f"tail bound {bound:.3e} at T={signal.horizon} exceeds {LAPLACE_SETTINGS['tail_tol']}",
                suggested_horizon=suggested)
        return signal.horizon
    start = max(LAPLACE_SETTINGS['horizon_factor'] / p, LAPLACE_SETTINGS['support_factor'] * signal.scale)
    horizon = _widen_horizon(signal, p, start)
    if horizon is None:
        raise TruncationError(f"no horizon up to {start * LAPLACE_SETTINGS['horizon_cap_factor']} "
                              f"meets the tail bound at p={p}", suggested_horizon=None)
    if horizon > start:
        logger.info(f"widened Laplace horizon from {start:.4g} to {horizon:.4g} at p={p}")
    return horizon


def laplace_numeric(f, point, spec=None):
    """
    F(p) = integral_0^T f(t) e^{-pt} dt by composite Simpson

    spec supplies panels and tolerance; its interval is replaced by [0, T].
    """
    spec = spec or QuadratureSpec(0.0, 1.0)
    horizon = resolve_horizon(f, point)
    p = point.p
    return float(integrate(lambda t: f(t) * np.exp(-p * t), spec.over(0.0, horizon)))


def laplace_conv_direct(f1, f2, t, spec=None):
    """(f1 * f2)(t) = integral_0^t f1(tau) f2(t - tau) dtau"""
    ensure_finite(t, 't')
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    if t == 0:
        return 0.0
    spec = spec or QuadratureSpec(0.0, 1.0)
    return float(integrate(lambda tau: f1(tau) * f2(t - tau), spec.over(0.0, t)))


def _conv_curve(f1, f2, t, inner_panels, block=1024):
    """Vectorized fixed-panel Simpson of the convolution integral at every t"""
    t = np.asarray(t, dtype=float)
    flat = t.ravel()
    s = np.linspace(0.0, 1.0, inner_panels + 1)
    out = np.empty_like(flat)
    for start in range(0, flat.size, block):
        chunk = flat[start:start + block, None]
        tau = chunk * s[None, :]
        out[start:start + block] = chunk[:, 0] * simpson(f1(tau) * f2(chunk - tau), x=s, axis=1)
    return out.reshape(t.shape)


def convolution_signal(f1, f2, inner_panels=LAPLACE_SETTINGS['inner_panels']):
    """CausalSignal whose samples are the convolution curve of f1 and f2"""
    support = None
    if f1.support is not None and f2.support is not None:
        support = f1.support + f2.support
    return CausalSignal(lambda t: _conv_curve(f1, f2, t, inner_panels),
                        support=support, scale=f1.scale + f2.scale)


class ConvTheoremCheck(NamedTuple):
    lhs: float
    rhs: float


def laplace_conv_theorem_check(f1, f2, point, spec=None):
    """
    lhs = L{f1}(p) * L{f2}(p), rhs = L{f1 * f2}(p)

    The convolution curve is built on the outer quadrature grid with a
    fixed inner Simpson rule.
    """
    spec = spec or QuadratureSpec(0.0, 1.0, target_rel_tol=LAPLACE_SETTINGS['theorem_rel_tol'])
    lhs = laplace_numeric(f1, point, spec) * laplace_numeric(f2, point, spec)
    rhs = laplace_numeric(convolution_signal(f1, f2), point, spec)
    return ConvTheoremCheck(lhs, rhs)


def _guard_poles(p):
    guard = ACTIVATION_SETTINGS['pole_guard']
    if abs(1.0 - p) < guard:
        raise DomainError(f"p = {p} is within {guard} of the pole at 1")
    nearest = round(p)
    if nearest >= 2 and abs(p - nearest) < guard:
        raise DomainError(f"p = {p} makes 2 - p a non-positive integer")


def sigmoid_lt_antiderivative(x, point, ctl=None):
    """
    (e^{x - px} / (1 - p)) * 2F1(1, 1 - p; 2 - p; -e^x), all real

    Its x-derivative is e^{(1 - p) x} / (e^x + 1).
    """
    ensure_finite(x, 'x')
    p = point.p
    if x >= 0:
        raise DomainError(f"series branch needs x < 0, got x = {x}")
    _guard_poles(p)
    series = hyp2f1(Hyp2F1Params(1.0, 1.0 - p, 2.0 - p, -math.exp(x)), ctl)
    return math.exp((1.0 - p) * x) / (1.0 - p) * series.value.real


def sigmoid_lt_integrand(x, point):
    """e^{(1 - p) x} / (e^x + 1) == e^{-px} S(x)"""
    p = getattr(point, 'p', point)
    ensure_finite(np.array([x, p], dtype=float), 'argument')
    return float(math.exp(-p * x) * expit(x))


def sigmoid_lt_spatial_derivative(x, point):
    """
    d/dx [e^{-px} / (e^{-x} + 1)] = e^{x - px} (1 - p (e^x + 1)) / (e^x + 1)^2

    Accepts a LaplacePoint or a bare real p (p = 0 gives the logistic derivative).
    """
    p = getattr(point, 'p', point)
    ensure_finite(np.array([x, p], dtype=float), 'argument')
    s = expit(x)
    return float(math.exp(-p * x) * s * ((1.0 - s) - p))


def sigmoid_lt_printed_derivative(x, point):
    """e^{x - px} (p e^x + p - 1) / (e^x + 1)^2, the negative of the verified form"""
    p = getattr(point, 'p', point)
    ensure_finite(np.array([x, p], dtype=float), 'argument')
    s = expit(x)
    return float(math.exp(-p * x) * s * (p - (1.0 - s)))


def relu_lt(point, k):
    """
    integral_0^k t e^{-pt} dt = (1 - e^{-pk}(1 + pk)) / p^2

    pk below the crossover uses k^2/2 - p k^3/3 + p^2 k^4/8.
    """
    ensure_finite(k, 'k')
    if not k > 0:
        raise DomainError(f"k must be positive, got {k}")
    p = point.p
    theta = p * k
    if theta < ACTIVATION_SETTINGS['relu_crossover']:
        return k ** 2 / 2 - p * k ** 3 / 3 + p ** 2 * k ** 4 / 8
    return (-math.expm1(-theta) - theta * math.exp(-theta)) / p ** 2


def relu_lt_printed(point, k):
    """-(e^{-pk}(1 + pk) + 1) / p^2 as printed; disagrees with quadrature"""
    p = point.p
    return -(math.exp(-p * k) * (1.0 + p * k) + 1.0) / p ** 2


def relu_lt_integrand_derivative(x, point):
    """d/dx (x e^{-px}) = e^{-px} (1 - px)"""
    p = point.p
    ensure_finite(x, 'x')
    return math.exp(-p * x) * (1.0 - p * x)


class PDerivativeComparison(NamedTuple):
    analytic_fd: float
    printed_form: float
    printed_form_fd: float


def relu_lt_p_derivative_check(point, k, rel_step=1e-4):
    """
    Side-by-side p-derivatives of the ReLU transform

    analytic_fd:     centered difference of the verified relu_lt in p
    printed_form:    e^{-px}(p^2 x^2 + 2px + 2e^{pk} + 2) / p^3 at x = k, as printed
    printed_form_fd: centered difference of relu_lt_printed in p

    Agreement is recorded by callers, never asserted here.
    """
    p = point.p
    h = rel_step * p
    lo, hi = LaplacePoint(p - h), LaplacePoint(p + h)
    analytic_fd = (relu_lt(hi, k) - relu_lt(lo, k)) / (2.0 * h)
    printed_fd = (relu_lt_printed(hi, k) - relu_lt_printed(lo, k)) / (2.0 * h)
    printed_form = math.exp(-p * k) * (p ** 2 * k ** 2 + 2 * p * k + 2 * math.exp(p * k) + 2) / p ** 3
    logger.debug(f"p-derivative at p={p}, k={k}: fd={analytic_fd}, printed={printed_form}")
    return PDerivativeComparison(analytic_fd, printed_form, printed_fd)
