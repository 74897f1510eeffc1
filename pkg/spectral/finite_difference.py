"""
Finite-difference oracles for checking analytic derivatives
"""
import numpy as np


def central_difference(func, x, h=1e-5):
    """Second-order centered difference; func may be real or complex valued"""
    return (func(x + h) - func(x - h)) / (2.0 * h)


def central_difference_4(func, x, h=1e-3):
    """Fourth-order five-point centered difference"""
    return (-func(x + 2 * h) + 8 * func(x + h) - 8 * func(x - h) + func(x - 2 * h)) / (12.0 * h)


def wirtinger_gradient(loss, z, h=1e-6):
    """
    dL/dz for a real loss of a complex vector, one component at a time

    Uses dL/dz = (dL/dRe z - i dL/dIm z) / 2 with centered differences.
    """
    z = np.asarray(z, dtype=np.complex128)
    grad = np.zeros_like(z)
    for j in range(z.size):
        step = np.zeros_like(z)
        step[j] = h
        d_re = (loss(z + step) - loss(z - step)) / (2.0 * h)
        d_im = (loss(z + 1j * step) - loss(z - 1j * step)) / (2.0 * h)
        grad[j] = 0.5 * (d_re - 1j * d_im)
    return grad


def relative_error(measured, reference, floor=1e-300):
    """max |measured - reference| / max |reference|, elementwise-safe"""
    measured = np.asarray(measured)
    reference = np.asarray(reference)
    scale = max(float(np.max(np.abs(reference))), floor)
    return float(np.max(np.abs(measured - reference))) / scale


def max_abs_error(measured, reference):
    return float(np.max(np.abs(np.asarray(measured) - np.asarray(reference))))
