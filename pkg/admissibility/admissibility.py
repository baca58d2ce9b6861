"""
Admissibility of (ridgelet, activation) pairs

K_{psi,eta} = (2 pi)^(m-1) * integral over zeta != 0 of conj(psi_hat(zeta)) eta_hat(zeta) / |zeta|^m dzeta

The integral is taken on nested decade annuli eps_n <= |zeta| <= eps_{n-1} (eps_0 = R) on both sides of the origin
at once. The annulus contributions of |integrand| tell the story: they decay geometrically when the integral
converges and stay flat (logarithmic singularity) or grow (power singularity) when it diverges.
"""
import collections
import functools
import math

import numpy as np

from activations.activation import ActivationSpec, FourierData, fourier_data, parse_activation
from admissibility.constants import (ADMISSIBLE, VANISHING, DIVERGENT, DEFAULT_QUADRATURE, OUTER_BREAKPOINTS,
                                     DEFAULT_MAX_ORDER, DIAGNOSIS_ROWS, DIAGNOSIS_ORDERS)
from admissibility.exceptions import IndeterminateAdmissibilityException, ConstructionFailedException
from admissibility.ridgelet_spec import RidgeletSpec
from core_grids.exceptions import InvalidArgumentException
from core_grids.parallel import map_chunks
from ridgenet.config import ridgenet_logger


class AdmissibilityReport(collections.namedtuple('AdmissibilityReport', [
        'K', 'classification', 'cutoff_trace', 'abs_trace', 'delta_flags', 'abs_integral'])):
    """
    Outcome of compute_K

    Attributes:
        K (complex): value of the converged integral (the last partial sum otherwise)
        classification (str): admissible, vanishing or divergent
        cutoff_trace (list): (eps, partial integral over eps <= |zeta| <= R) pairs
        abs_trace (list): (eps, partial integral of |integrand|) pairs
        delta_flags (list): orders j of delta^(j) terms of eta_hat whose pairing with conj(psi_hat) is nonzero
        abs_integral (float): integral of |integrand| over the last annulus set, the scale of tol_zero
    """
    __slots__ = ()

    @property
    def admissible(self):
        return self.classification == ADMISSIBLE


def _fourier_data_of(eta):
    if isinstance(eta, RidgeletSpec):
        return FourierData(eta.fourier, [], 0)
    if isinstance(eta, FourierData):
        return eta
    return fourier_data(eta)


def _integrand(psi, eta_data):
    constant = (2.0 * math.pi) ** (psi.m - 1)

    def value(zeta):
        return constant * np.conj(psi.fourier(zeta)) * eta_data.regular_part(zeta) / abs(zeta) ** psi.m

    return value


@functools.lru_cache(maxsize=8)
def _legendre_rule(nodes):
    return np.polynomial.legendre.leggauss(nodes)


def _gauss_legendre(function, low, high, nodes):
    abscissae, weights = _legendre_rule(nodes)
    half = 0.5 * (high - low)
    return half * function(low + half * (abscissae + 1.0)).dot(weights)


def _adaptive(function, low, high, quad, depth=0):
    """
    Gauss-Legendre rule on [low, high], bisected until the two halves reproduce the whole

    function maps an array of abscissae to rows (real part, imaginary part, modulus); the modulus row sets the
    scale of the relative tolerance, since the signed rows may cancel to zero.
    """
    middle = 0.5 * (low + high)
    whole = _gauss_legendre(function, low, high, quad.nodes)
    halves = _gauss_legendre(function, low, middle, quad.nodes) + _gauss_legendre(function, middle, high, quad.nodes)
    tolerance = max(quad.epsabs, quad.epsrel * abs(halves[-1]))
    if depth >= quad.max_depth or np.max(np.abs(whole - halves)) <= tolerance:
        return halves
    return _adaptive(function, low, middle, quad, depth + 1) + _adaptive(function, middle, high, quad, depth + 1)


def _annulus(integrand, low, high, quad, logarithmic):
    """
    Integral over low <= |zeta| <= high of the integrand (complex) and of its modulus

    Inner annuli are integrated in log(zeta) so that power-law singularities become smooth exponentials.
    """
    def rows(t, jacobian):
        right, left = integrand(t), integrand(-t)
        signed = (right + left) * jacobian
        return np.stack([signed.real, signed.imag, (np.abs(right) + np.abs(left)) * jacobian])

    if logarithmic:
        def function(s):
            t = np.exp(s)
            return rows(t, t)

        total = _adaptive(function, math.log(low), math.log(high), quad)
    else:
        edges = [low] + [point for point in OUTER_BREAKPOINTS if low < point < high] + [high]
        total = sum(_adaptive(lambda t: rows(t, 1.0), start, stop, quad)
                    for start, stop in zip(edges[:-1], edges[1:]))
    return complex(total[0], total[1]), float(total[2])



def _delta_flags(psi, eta_data):
    # conj(psi_hat) vanishes to order m + l at the origin, so delta^(j) pairs to zero exactly when j < m + l
    return [order for order, coefficient in enumerate(eta_data.delta_coeffs)
            if coefficient != 0 and order >= psi.m + psi.base_order]


def partial_K(psi, eta, cutoff, quad=DEFAULT_QUADRATURE):
    """
    Integral of the admissibility integrand over cutoff <= |zeta| <= R, with the integral of its modulus

    Returns:
        tuple: (complex partial integral, float partial integral of the modulus)
    """
    integrand = _integrand(psi, _fourier_data_of(eta))
    return _annulus(integrand, cutoff, quad.outer_radius, quad, logarithmic=True)


def compute_K(psi, eta, quad=DEFAULT_QUADRATURE):
    """
    Admissibility constant K_{psi,eta} and the classification of the pair

    Args:
        psi (RidgeletSpec): ridgelet Lambda^m G^(l)
        eta (ActivationSpec or RidgeletSpec): activation; a ridgelet is accepted for self-admissibility checks
        quad (QuadratureParams): quadrature and decision tolerances

    Returns:
        AdmissibilityReport

    Raises:
        IndeterminateAdmissibilityException: if the annulus contributions neither decay nor stay flat
        ActivationNotImplementedException: if eta has no Fourier data
    """
    eta_data = _fourier_data_of(eta)
    integrand = _integrand(psi, eta_data)
    cutoffs = [10.0 ** -n for n in range(1, quad.decades + 1)]

    partial, partial_abs = _annulus(integrand, cutoffs[0], quad.outer_radius, quad, logarithmic=False)
    cutoff_trace, abs_trace, increments = [(cutoffs[0], partial)], [(cutoffs[0], partial_abs)], [partial_abs]
    for outer, inner in zip(cutoffs[:-1], cutoffs[1:]):
        value, modulus = _annulus(integrand, inner, outer, quad, logarithmic=True)
        partial += value
        partial_abs += modulus
        cutoff_trace.append((inner, partial))
        abs_trace.append((inner, partial_abs))
        increments.append(modulus)

    delta_flags = _delta_flags(psi, eta_data)
    if delta_flags:
        ridgenet_logger.debug('delta terms of orders %s pair nonzero with %s' % (delta_flags, psi.name))

    tail = increments[-quad.divergence_run - 1:]
    floor = quad.tol_conv * partial_abs
    if partial_abs > 0 and all(later >= quad.growth_floor * earlier and later > floor
                               for earlier, later in zip(tail[:-1], tail[1:])):
        classification = DIVERGENT
    elif increments[-1] <= floor or partial_abs == 0:
        if partial_abs == 0 or abs(partial) <= quad.tol_zero * partial_abs:
            classification, partial = VANISHING, 0j
        else:
            classification = ADMISSIBLE
    else:
        raise IndeterminateAdmissibilityException(
            'Admissibility integral for %s is indeterminate: last annulus carries %.3e of %.3e'
            % (psi.name, increments[-1], partial_abs), trace=cutoff_trace)

    ridgenet_logger.debug('K(%s, %s) = %r -> %s' % (psi.name, getattr(eta, 'name', eta), partial, classification))
    return AdmissibilityReport(partial, classification, cutoff_trace, abs_trace, delta_flags, partial_abs)


def reference_scale(psi, eta, quad=DEFAULT_QUADRATURE):
    """
    (2 pi)^(m-1) * integral of |psi_hat| |eta_hat| / |zeta|^m over cutoff_min <= |zeta| <= R, or of |psi_hat| / |zeta|^m
    when the regular part of eta_hat vanishes identically
    """
    eta_data = _fourier_data_of(eta)
    cutoff = 10.0 ** -quad.decades
    _, modulus = _annulus(_integrand(psi, eta_data), cutoff, quad.outer_radius, quad, logarithmic=True)
    if modulus > 0:
        return modulus
    flat = FourierData(lambda zeta: np.ones_like(np.asarray(zeta, dtype=float)), [], 0)
    _, modulus = _annulus(_integrand(psi, flat), cutoff, quad.outer_radius, quad, logarithmic=True)
    return modulus


def effective_K(report, psi, eta, a_max, quad=DEFAULT_QUADRATURE):
    """
    Normalization for reconstructing with a pair of any classification

    Admissible pairs use K. A divergent pair uses the partial integral down to the smallest |zeta| the parameter box
    resolves, 1 / a_max (its modulus when the signed integral cancels); a vanishing pair uses reference_scale.
    """
    if report.classification == ADMISSIBLE:
        return report.K
    if report.classification == DIVERGENT:
        partial, modulus = partial_K(psi, eta, 1.0 / a_max, quad)
        if abs(partial) > quad.tol_zero * modulus:
            return partial
        return complex(modulus)
    return complex(reference_scale(psi, eta, quad))


def construct_admissible(eta, m, max_order=DEFAULT_MAX_ORDER, quad=DEFAULT_QUADRATURE):
    """
    Smallest l >= pole order of eta_hat such that Lambda^m G^(l) is admissible with eta

    Orders are scanned one by one, which takes the even/odd alternation of K into account.

    Raises:
        ConstructionFailedException: if no order up to max_order is admissible
    """
    eta_data = fourier_data(eta)
    reports = []
    for order in range(eta_data.pole_order, max_order + 1):
        psi = RidgeletSpec(m, order)
        try:
            report = compute_K(psi, eta, quad)
        except IndeterminateAdmissibilityException as e:
            ridgenet_logger.warning('Skipping %s for %s: %s' % (psi.name, eta.name, e))
            reports.append((order, None))
            continue
        reports.append((order, report))
        if report.admissible:
            ridgenet_logger.info('Constructed %s for %s with K = %r' % (psi.name, eta.name, report.K))
            return psi
    raise ConstructionFailedException('No ridgelet Lambda^%d G^(l) with %d <= l <= %d is admissible for %s'
                                      % (m, eta_data.pole_order, max_order, eta.name), reports=reports)


TableCell = collections.namedtuple('TableCell', ['label', 'activation', 'psi', 'report'])


def diagnose_table(m, workers=None, quad=DEFAULT_QUADRATURE):
    """
    Admissibility of the activation rows against psi = Lambda^m G, Lambda^m G', Lambda^m G''

    Returns:
        list of list of TableCell: one list per activation row, one cell per ridgelet column

    Raises:
        InvalidArgumentException: if m is not 1 or 2
    """
    if m not in (1, 2):
        raise InvalidArgumentException('Table diagnosis is defined for m in {1, 2}, got %r' % (m,))

    def diagnose_rows(start, stop):
        rows = []
        for label, name in DIAGNOSIS_ROWS[start:stop]:
            eta = parse_activation(name)
            rows.append([TableCell(label, eta, RidgeletSpec(m, order), compute_K(RidgeletSpec(m, order), eta, quad))
                         for order in DIAGNOSIS_ORDERS])
        return rows

    blocks = map_chunks(diagnose_rows, len(DIAGNOSIS_ROWS), workers=workers, chunk_size=1)
    return [row for block in blocks for row in block]


def diagnose_parity(family, m, orders, quad=DEFAULT_QUADRATURE):
    """
    K of psi = Lambda^m G against GaussianDeriv(k) or SigmoidDeriv(k) for each k in orders

    Args:
        family (str): 'gaussian' or 'sigmoid'
        m (int): dimension
        orders (list of int): derivative orders k >= 1

    Returns:
        list of (int, AdmissibilityReport)
    """
    kinds = {'gaussian': 'drbf', 'sigmoid': 'dsigmoid'}
    if family not in kinds:
        raise InvalidArgumentException('Unknown parity family %r, expected gaussian or sigmoid' % (family,))
    psi = RidgeletSpec(m, 0)
    return [(order, compute_K(psi, ActivationSpec(kinds[family], order=order), quad)) for order in orders]
