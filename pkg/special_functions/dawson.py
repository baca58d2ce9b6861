import math

import numpy as np
from scipy import integrate, special

from core_grids.exceptions import InvalidArgumentException
from special_functions.constants import (SQRT_2, SQRT_PI, DAWSON_QUADRATURE_LIMIT, DAWSON_ASYMPTOTIC_TERMS,
                                         DAWSON_QUADRATURE_EPSABS, DAWSON_QUADRATURE_EPSREL)


def dawson(z):
    """
    Dawson function F(z) = exp(-z^2) * integral_0^z exp(w^2) dw, vectorized
    """
    return special.dawsn(z)


def _dawson_asymptotic(z):
    # F(z) ~ sum_k (2k-1)!! / (2^(k+1) z^(2k+1))
    total, term = 0.0, 1.0 / (2.0 * z)
    for k in range(DAWSON_ASYMPTOTIC_TERMS):
        total += term
        term *= (2 * k + 1) / (2.0 * z * z)
    return total


def dawson_quadrature(z):
    """
    Scalar Dawson function from its definition: Gauss-Kronrod quadrature for |z| <= 6, asymptotic series beyond

    Slower than dawson(); kept as an independent reference for it.
    """
    z = float(z)
    if z == 0:
        return 0.0
    if abs(z) > DAWSON_QUADRATURE_LIMIT:
        return _dawson_asymptotic(z)
    value, _ = integrate.quad(lambda w: math.exp(w * w - z * z), 0.0, z,
                              epsabs=DAWSON_QUADRATURE_EPSABS, epsrel=DAWSON_QUADRATURE_EPSREL)
    return value


def dawson_derivatives(order, z):
    """
    F, F', ..., F^(order) at z

    F' = 1 - 2zF and F^(n+1) = -2z F^(n) - 2n F^(n-1) for n >= 1.

    Returns:
        list of numpy.ndarray: order + 1 arrays shaped like z
    """
    z = np.asarray(z, dtype=float)
    derivatives = [dawson(z)]
    if order >= 1:
        derivatives.append(1.0 - 2.0 * z * derivatives[0])
    for n in range(1, order):
        derivatives.append(-2.0 * z * derivatives[n] - 2.0 * n * derivatives[n - 1])
    return derivatives


def hilbert_gaussian(order, z):
    """
    order-th derivative of the Hilbert transform of G(z) = exp(-z^2 / 2)

    With the Hilbert transform whose multiplier is sgn(omega), HG(z) = (2i / sqrt(pi)) F(z / sqrt(2)); each
    derivative brings a factor 1 / sqrt(2) from the inner scaling.

    Args:
        order (int): derivative order >= 0
        z (float or numpy.ndarray): evaluation points

    Returns:
        complex or numpy.ndarray of complex
    """
    if order < 0:
        raise InvalidArgumentException('Derivative order must be non-negative, got %d' % order)
    scaled = np.asarray(z, dtype=float) / SQRT_2
    derivative = dawson_derivatives(order, scaled)[order]
    return 1j * (2.0 / SQRT_PI) * SQRT_2 ** (-order) * derivative
