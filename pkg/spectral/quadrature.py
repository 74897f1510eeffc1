"""
Composite Simpson quadrature with panel doubling

This is the oracle behind every closed-form transform in the package. Each
level evaluates a fresh uniform grid of ``panels + 1`` nodes and integrates
with scipy's composite Simpson rule; the panel count doubles until two
successive estimates differ by less than ``target_rel_tol * max(|S|, 1)``.
"""
import logging

import numpy as np
from scipy.integrate import simpson

from config import QUADRATURE_SETTINGS
from spectral.errors import ConvergenceError, NonFiniteError
from spectral.signals import ensure_finite

logger = logging.getLogger('quadrature')


def _elementwise(func, *grids):
    values = np.vectorize(func, otypes=[complex])(*grids)
    if not np.any(values.imag):
        values = values.real
    return values


def evaluate_on_grid(func, *grids):
    """Call func on whole grids, falling back to elementwise evaluation"""
    try:
        values = np.asarray(func(*grids))
    except (TypeError, ValueError):
        # scalar-only handles: math.exp, lambdas that branch on their argument
        return _elementwise(func, *grids)
    if values.shape != grids[0].shape:
        values = _elementwise(func, *grids)
    return values


def _simpson(values, x, axis=-1):
    if np.iscomplexobj(values):
        return simpson(values.real, x=x, axis=axis) + 1j * simpson(values.imag, x=x, axis=axis)
    return simpson(values, x=x, axis=axis)


def _converged(estimate, previous, tol):
    return previous is not None and abs(estimate - previous) < tol * max(abs(estimate), 1.0)


def integrate(func, spec):
    """
    Integrate a vectorized function over [spec.lower, spec.upper]

    Args:
        func: callable taking a numpy array of nodes, real or complex valued
        spec (QuadratureSpec): interval, starting panels and tolerance

    Returns:
        float or complex: finest estimate

    Raises:
        ConvergenceError: panel cap reached first (carries last estimate)
    """
    panels = spec.panels
    previous = None
    while True:
        x = np.linspace(spec.lower, spec.upper, panels + 1)
        values = evaluate_on_grid(func, x)
        if not np.all(np.isfinite(values)):
            raise NonFiniteError(f"integrand is not finite on [{spec.lower}, {spec.upper}]")
        estimate = _simpson(values, x)
        if _converged(estimate, previous, spec.target_rel_tol):
            logger.debug(f"converged with {panels} panels on [{spec.lower}, {spec.upper}]")
            return estimate
        if panels >= spec.panel_cap:
            raise ConvergenceError(
                f"Simpson rule did not converge within {spec.panel_cap} panels",
                last_estimate=estimate, steps=panels)
        previous = estimate
        panels *= 2


def continuous_ft_quadrature(f, omega, spec):
    """
    Oracle for F(omega) = integral of f(x) e^{-i omega x} over the spec interval

    Angular-frequency convention.
    """
    ensure_finite(omega, 'omega')
    result = integrate(lambda x: evaluate_on_grid(f, x) * np.exp(-1j * omega * x), spec)
    return complex(result)


def integrate_2d(func, spec_x, spec_y, panel_cap=QUADRATURE_SETTINGS['panel_cap_2d']):
    """Tensor-product Simpson over spec_x x spec_y; func(x, y) on meshgrids"""
    panels = max(spec_x.panels, spec_y.panels)
    tol = min(spec_x.target_rel_tol, spec_y.target_rel_tol)
    previous = None
    while True:
        x = np.linspace(spec_x.lower, spec_x.upper, panels + 1)
        y = np.linspace(spec_y.lower, spec_y.upper, panels + 1)
        xx, yy = np.meshgrid(x, y, indexing='xy')
        values = evaluate_on_grid(func, xx, yy)
        if not np.all(np.isfinite(values)):
            raise NonFiniteError("2D integrand is not finite on the rectangle")
        estimate = _simpson(_simpson(values, x, axis=1), y, axis=0)
        if _converged(estimate, previous, tol):
            logger.debug(f"2D rule converged with {panels} panels per axis")
            return estimate
        if panels >= panel_cap:
            raise ConvergenceError(
                f"2D Simpson rule did not converge within {panel_cap} panels per axis",
                last_estimate=estimate, steps=panels)
        previous = estimate
        panels *= 2


def continuous_ft2_quadrature(f, u, v, spec_x, spec_y):
    """Oracle for F(u, v) with the ordinary-frequency kernel e^{-i2pi(ux + vy)}"""
    ensure_finite(np.array([u, v], dtype=float), 'frequency')
    kernel = lambda x, y: evaluate_on_grid(f, x, y) * np.exp(-2j * np.pi * (u * x + v * y))
    return complex(integrate_2d(kernel, spec_x, spec_y))
