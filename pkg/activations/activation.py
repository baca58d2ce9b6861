"""
Activation functions eta of one-hidden-layer networks, with the Fourier data admissibility needs

Fourier convention: f_hat(zeta) = integral f(z) exp(-i z zeta) dz, angular frequency throughout. For an activation
that is not integrable, f_hat is a distribution; it is described here by its regular part on zeta != 0 plus the
coefficients c_j of the terms c_j delta^(j)(zeta) sitting at the origin.
"""
import collections
import math

import numpy as np
from numpy.polynomial import Polynomial
from scipy import special

from activations.constants import (TRUNCATED_POWER, RELU, STEP, SIGMOID, SIGMOID_DERIVATIVE, SOFTPLUS, TANH,
                                   TANH_DERIVATIVE, GAUSSIAN_RBF, GAUSSIAN_DERIVATIVE, DIRAC_DELTA, DIRAC_DERIVATIVE,
                                   LINEAR, ORDERED_KINDS, DEFAULT_DIRAC_WIDTH, SINH_ARGUMENT_LIMIT)
from activations.exceptions import ActivationNotImplementedException, UnknownActivationException
from special_functions.constants import SQRT_2PI
from special_functions.gaussian import gaussian, gaussian_derivative, i_power, imaginary_power

FourierData = collections.namedtuple('FourierData', ['regular_part', 'delta_coeffs', 'pole_order'])


class ActivationSpec(collections.namedtuple('ActivationSpec', ['kind', 'order', 'width', 'scale', 'polynomial'])):
    """
    An activation eta(z) = scale * base(z) + sum_j polynomial[j] z^j

    Attributes:
        kind (str): one of the kinds in activations.constants
        order (int): k of TruncatedPower(k), SigmoidDeriv(k), GaussianDeriv(k), DiracDerivApprox(k), ...
        width (float): mollifier width of the Dirac kinds, ignored otherwise
        scale (float): real factor applied to the base function
        polynomial (tuple): coefficients of a polynomial added to the base function, lowest degree first
    """
    __slots__ = ()

    def __new__(cls, kind, order=0, width=None, scale=1.0, polynomial=()):
        if kind == RELU:
            order = 1
        elif kind == STEP:
            order = 0
        if kind in (DIRAC_DELTA, DIRAC_DERIVATIVE) and width is None:
            width = DEFAULT_DIRAC_WIDTH
        return super(ActivationSpec, cls).__new__(cls, kind, int(order), width, float(scale), tuple(polynomial))

    @property
    def name(self):
        """CLI name of the base function, e.g. relu or tpow:3."""
        if self.kind in ORDERED_KINDS:
            return '%s:%d' % (self.kind, self.order)
        return self.kind

    def eval(self, z):
        return evaluate(self, z)

    def scaled(self, factor):
        return self._replace(scale=self.scale * factor,
                             polynomial=tuple(factor * coefficient for coefficient in self.polynomial))

    def plus_polynomial(self, coefficients):
        length = max(len(coefficients), len(self.polynomial))
        merged = [0.0] * length
        for index, coefficient in enumerate(self.polynomial):
            merged[index] += coefficient
        for index, coefficient in enumerate(coefficients):
            merged[index] += coefficient
        return self._replace(polynomial=tuple(merged))


def parse_activation(name, width=None):
    """
    Resolve a CLI activation name (relu, step, tpow:k, sigmoid, dsigmoid:k, softplus, tanh, dtanh:k, rbf, drbf:k,
    delta, ddelta:k, linear) into an ActivationSpec

    Raises:
        UnknownActivationException: if the name or its order cannot be parsed
    """
    kind, _, order = name.strip().lower().partition(':')
    if kind not in (TRUNCATED_POWER, RELU, STEP, SIGMOID, SIGMOID_DERIVATIVE, SOFTPLUS, TANH, TANH_DERIVATIVE,
                    GAUSSIAN_RBF, GAUSSIAN_DERIVATIVE, DIRAC_DELTA, DIRAC_DERIVATIVE, LINEAR):
        raise UnknownActivationException(name=name)
    if kind in ORDERED_KINDS:
        try:
            order = int(order) if order else 1
        except ValueError:
            raise UnknownActivationException(name=name)
        minimum = 0 if kind == TRUNCATED_POWER else 1
        if order < minimum:
            raise UnknownActivationException('Order of %s must be at least %d' % (kind, minimum))
    elif order:
        raise UnknownActivationException(name=name)
    else:
        order = 0
    return ActivationSpec(kind, order=order, width=width)


def _logistic_polynomial(order):
    # d/dz P(sigma) = P'(sigma) * sigma * (1 - sigma)
    poly, chain = Polynomial([0.0, 1.0]), Polynomial([0.0, 1.0, -1.0])
    for _ in range(order):
        poly = poly.deriv() * chain
    return poly


def _tanh_polynomial(order):
    # d/dz Q(tanh) = Q'(tanh) * (1 - tanh^2)
    poly, chain = Polynomial([0.0, 1.0]), Polynomial([1.0, 0.0, -1.0])
    for _ in range(order):
        poly = poly.deriv() * chain
    return poly


def _base_eval(spec, z):
    kind = spec.kind
    if kind in (TRUNCATED_POWER, RELU, STEP):
        positive = z > 0
        return np.where(positive, np.where(positive, z, 0.0) ** spec.order, 0.0)
    if kind == SIGMOID:
        return special.expit(z)
    if kind == SIGMOID_DERIVATIVE:
        return _logistic_polynomial(spec.order)(special.expit(z))
    if kind == SOFTPLUS:
        return np.logaddexp(0.0, z)
    if kind == TANH:
        return np.tanh(z)
    if kind == TANH_DERIVATIVE:
        return _tanh_polynomial(spec.order)(np.tanh(z))
    if kind == GAUSSIAN_RBF:
        return gaussian(z)
    if kind == GAUSSIAN_DERIVATIVE:
        return gaussian_derivative(spec.order, z)
    if kind == DIRAC_DELTA:
        return gaussian(z / spec.width) / (spec.width * SQRT_2PI)
    if kind == DIRAC_DERIVATIVE:
        return gaussian_derivative(spec.order, z / spec.width) / (spec.width ** (spec.order + 1) * SQRT_2PI)
    if kind == LINEAR:
        return np.array(z, dtype=float)
    raise ActivationNotImplementedException(kind=kind)


def evaluate(spec, z):
    """
    Pointwise value of the activation

    Args:
        spec (ActivationSpec): activation
        z (float or numpy.ndarray): arguments

    Returns:
        numpy.ndarray: eta(z), real
    """
    z = np.asarray(z, dtype=float)
    values = spec.scale * _base_eval(spec, z)
    if spec.polynomial:
        values = values + Polynomial(spec.polynomial)(z)
    return values


def _reciprocal_sinh(x):
    x = np.asarray(x, dtype=float)
    clipped = np.clip(x, -SINH_ARGUMENT_LIMIT, SINH_ARGUMENT_LIMIT)
    with np.errstate(divide='ignore'):
        return np.where(np.abs(x) < SINH_ARGUMENT_LIMIT, 1.0 / np.sinh(clipped), 0.0)


def _z_over_sinh(zeta, rate):
    """pi zeta / sinh(rate pi zeta), continued by its limit 1 / rate at zeta = 0."""
    x = rate * np.pi * np.asarray(zeta, dtype=float)
    safe = np.where(x == 0, 1.0, x)
    return np.where(x == 0, 1.0, safe * _reciprocal_sinh(safe)) / rate


def _base_fourier_data(spec):
    kind, k = spec.kind, spec.order
    if kind in (TRUNCATED_POWER, RELU, STEP):
        # z_+^k -> k! / (i zeta)^(k+1) + pi i^k delta^(k)
        factorial = math.factorial(k)
        return FourierData(lambda zeta: factorial / imaginary_power(zeta, k + 1),
                           [0j] * k + [math.pi * i_power(k)], k + 1)
    if kind == SIGMOID:
        # sigma' -> pi zeta / sinh(pi zeta); dividing by i zeta gives the regular part, the 1/2 offset gives pi delta
        return FourierData(lambda zeta: -1j * np.pi * _reciprocal_sinh(np.pi * zeta), [math.pi + 0j], 1)
    if kind == SIGMOID_DERIVATIVE:
        return FourierData(lambda zeta: imaginary_power(zeta, k - 1) * _z_over_sinh(zeta, 1.0), [], 0)
    if kind == SOFTPLUS:
        # softplus = z_+ + log(1 + exp(-|z|)); only z_+ contributes at the origin
        return FourierData(lambda zeta: -np.pi * _reciprocal_sinh(np.pi * zeta) / zeta, [0j, math.pi * 1j], 2)
    if kind == TANH:
        # tanh = 2 sigma(2z) - 1; the constant parts cancel
        return FourierData(lambda zeta: -1j * np.pi * _reciprocal_sinh(0.5 * np.pi * zeta), [], 1)
    if kind == TANH_DERIVATIVE:
        return FourierData(lambda zeta: imaginary_power(zeta, k - 1) * _z_over_sinh(zeta, 0.5), [], 0)
    if kind == GAUSSIAN_RBF:
        return FourierData(lambda zeta: SQRT_2PI * gaussian(zeta) + 0j, [], 0)
    if kind == GAUSSIAN_DERIVATIVE:
        return FourierData(lambda zeta: imaginary_power(zeta, k) * SQRT_2PI * gaussian(zeta), [], 0)
    if kind == DIRAC_DELTA:
        # exact delta limit of the mollifier
        return FourierData(lambda zeta: np.ones_like(np.asarray(zeta, dtype=float)) + 0j, [], 0)
    if kind == DIRAC_DERIVATIVE:
        return FourierData(lambda zeta: imaginary_power(zeta, k) + 0j, [], 0)
    if kind == LINEAR:
        return FourierData(lambda zeta: np.zeros_like(np.asarray(zeta, dtype=float)) + 0j, [0j, 2j * math.pi], 0)
    raise ActivationNotImplementedException(kind=kind)


def fourier_data(spec):
    """
    Regular part, delta-at-origin coefficients and pole order of eta_hat

    A polynomial added to the activation only changes the delta coefficients (z^j -> 2 pi i^j delta^(j)).

    Raises:
        ActivationNotImplementedException: for kinds without closed-form Fourier data
    """
    base = _base_fourier_data(spec)
    scale = spec.scale
    coefficients = [scale * coefficient for coefficient in base.delta_coeffs]
    for degree, coefficient in enumerate(spec.polynomial):
        if degree >= len(coefficients):
            coefficients.extend([0j] * (degree + 1 - len(coefficients)))
        coefficients[degree] += 2.0 * math.pi * i_power(degree) * coefficient
    regular = base.regular_part

    def regular_part(zeta):
        return scale * regular(np.asarray(zeta, dtype=float))

    return FourierData(regular_part, coefficients, base.pole_order)


def derivative_spec(spec):
    """
    Activation whose value is the (distributional) derivative of spec, with a scalar multiplier

    Returns:
        tuple: (ActivationSpec, float) such that multiplier * eval(result) = d/dz eval(spec)

    Raises:
        ActivationNotImplementedException: for the linear function, whose derivative is a constant
    """
    kind, k = spec.kind, spec.order
    if spec.polynomial:
        raise ActivationNotImplementedException('Derivative of an activation with an added polynomial is not '
                                                'represented in the zoo', kind=kind)
    base = ActivationSpec(kind, order=k, width=spec.width)
    if kind in (TRUNCATED_POWER, RELU, STEP):
        if k == 0:
            result, multiplier = ActivationSpec(DIRAC_DELTA, width=spec.width), 1.0
        elif k == 1:
            result, multiplier = ActivationSpec(STEP), 1.0
        else:
            result, multiplier = ActivationSpec(TRUNCATED_POWER, order=k - 1), float(k)
    elif kind == SOFTPLUS:
        result, multiplier = ActivationSpec(SIGMOID), 1.0
    elif kind == SIGMOID:
        result, multiplier = ActivationSpec(SIGMOID_DERIVATIVE, order=1), 1.0
    elif kind == TANH:
        result, multiplier = ActivationSpec(TANH_DERIVATIVE, order=1), 1.0
    elif kind == GAUSSIAN_RBF:
        result, multiplier = ActivationSpec(GAUSSIAN_DERIVATIVE, order=1), 1.0
    elif kind == DIRAC_DELTA:
        result, multiplier = ActivationSpec(DIRAC_DERIVATIVE, order=1, width=spec.width), 1.0
    elif kind in (SIGMOID_DERIVATIVE, TANH_DERIVATIVE, GAUSSIAN_DERIVATIVE, DIRAC_DERIVATIVE):
        result, multiplier = base._replace(order=k + 1), 1.0
    else:
        raise ActivationNotImplementedException('Activation %s has no derivative in the zoo' % spec.name, kind=kind)
    return result._replace(scale=spec.scale), multiplier
