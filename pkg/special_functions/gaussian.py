import numpy as np

from core_grids.exceptions import InvalidArgumentException


def hermite_e(order, z):
    """
    Probabilists' Hermite polynomial He_order(z) by the three-term recurrence He_{n+1} = z He_n - n He_{n-1}
    """
    z = np.asarray(z, dtype=float)
    previous, current = np.ones_like(z), z.copy()
    if order == 0:
        return previous
    for n in range(1, order):
        previous, current = current, z * current - n * previous
    return current


def gaussian(z):
    z = np.asarray(z, dtype=float)
    return np.exp(-0.5 * z * z)


def gaussian_derivative(order, z):
    """
    l-th derivative of G(z) = exp(-z^2 / 2)

    G^(l)(z) = (-1)^l He_l(z) G(z)

    Args:
        order (int): derivative order l >= 0
        z (float or numpy.ndarray): evaluation points

    Returns:
        float or numpy.ndarray: values of G^(l) at z
    """
    if order < 0:
        raise InvalidArgumentException('Derivative order must be non-negative, got %d' % order)
    sign = -1.0 if order % 2 else 1.0
    return sign * hermite_e(order, z) * gaussian(z)


def i_power(k):
    """i^k, exact for integer k."""
    return (1, 1j, -1, -1j)[k % 4]


def imaginary_power(zeta, k):
    """(i zeta)^k with the sign of zeta^k kept exact, so that parity cancellations are exact too."""
    return i_power(k) * np.asarray(zeta, dtype=float) ** k
