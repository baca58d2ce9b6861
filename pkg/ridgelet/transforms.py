"""
Forward ridgelet transforms

T(a, b) = sum_n f(x_n) conj(psi(a . x_n - b)) ||a|| dx^m, the direct discretization, and the same quantity computed
in the Fourier domain through the Fourier slice theorem for one-dimensional signals.
"""
import math

import numpy as np
import pandas as pd

from core_grids.constants import FLOAT_FORMAT
from core_grids.exceptions import InvalidArgumentException
from core_grids.grids import RidgeletCoefficients
from core_grids.parallel import map_chunks
from ridgelet.constants import (WEIGHT_EXPONENT, A_MIN_FRACTION, FOURIER_SLICE_MIN_A, FOURIER_SLICE_BETA_MARGIN,
                                FOURIER_SLICE_REFINEMENT)
from ridgenet.config import ridgenet_logger
from special_functions.gaussian import gaussian_derivative
from special_functions.multiplier import padded_length, angular_frequencies


def default_a_min(param_grid):
    return A_MIN_FRACTION * param_grid.a_step


def conj_ridgelet(psi, z):
    """conj(psi(z)); even-m ridgelets are real and take the real path."""
    if psi.m % 2 == 0:
        return psi.scale * gaussian_derivative(psi.base_order + psi.m, z)
    return np.conj(psi.eval(z))


def _check_dimensions(f, psi, param_grid):
    if psi.m != f.dim or param_grid.m != f.dim:
        raise InvalidArgumentException('Dimension mismatch: signal m=%d, ridgelet m=%d, parameter grid m=%d'
                                       % (f.dim, psi.m, param_grid.m))


def forward_1d(f, psi, param_grid, workers=None, chunk_size=None):
    """
    Direct-sum ridgelet transform of a sampled signal

    Args:
        f (SampledSignal): target on its grid x_n
        psi (RidgeletSpec): ridgelet with m = 1
        param_grid (ParamGrid): lattice of (a, b)
        workers (int, optional): thread pool size
        chunk_size (int, optional): a-values per work item

    Returns:
        RidgeletCoefficients: T(a_i, b_j) = sum_n f(x_n) conj(psi(a_i x_n - b_j)) |a_i| dx
    """
    _check_dimensions(f, psi, param_grid)
    x, values, dx = f.points(), f.values, f.grid.step
    a, b = param_grid.a_axes[0].points(), param_grid.b_axis.points()
    ridgenet_logger.debug('forward_1d: %d samples, %d x %d parameter cells' % (x.size, a.size, b.size))

    def transform_rows(start, stop):
        rows = a[start:stop]
        arguments = rows[:, None, None] * x[None, None, :] - b[None, :, None]
        sums = np.sum(conj_ridgelet(psi, arguments) * values, axis=-1)
        return sums * (np.abs(rows) ** WEIGHT_EXPONENT * dx)[:, None]

    blocks = map_chunks(transform_rows, a.size, workers=workers, chunk_size=chunk_size)
    return RidgeletCoefficients(param_grid, np.concatenate(blocks, axis=0))


def forward_2d(f, psi, param_grid, workers=None, chunk_size=None):
    """
    Direct-sum ridgelet transform of a sampled image

    T(a, b) = sum over pixels of f(x) conj(psi(a . x - b)) ||a|| dx^2, a running over the a-lattice in lexicographic
    order. Work is split over blocks of a-vectors.
    """
    _check_dimensions(f, psi, param_grid)
    x, y = f.mesh()
    pixels = np.stack([x.ravel(), y.ravel()], axis=-1)
    values = f.values.ravel()
    a_vectors, b = param_grid.a_vectors(), param_grid.b_axis.points()
    norms = np.linalg.norm(a_vectors, axis=-1)
    ridgenet_logger.debug('forward_2d: %d pixels, %d directions x %d offsets'
                          % (values.size, a_vectors.shape[0], b.size))

    def transform_rows(start, stop):
        projections = a_vectors[start:stop].dot(pixels.T)
        arguments = projections[:, None, :] - b[None, :, None]
        sums = np.sum(conj_ridgelet(psi, arguments) * values, axis=-1)
        return sums * (norms[start:stop] ** WEIGHT_EXPONENT * f.pixel_area)[:, None]

    blocks = map_chunks(transform_rows, a_vectors.shape[0], workers=workers, chunk_size=chunk_size)
    return RidgeletCoefficients(param_grid, np.concatenate(blocks, axis=0))


def forward(f, psi, param_grid, workers=None, chunk_size=None):
    if f.dim == 1:
        return forward_1d(f, psi, param_grid, workers=workers, chunk_size=chunk_size)
    return forward_2d(f, psi, param_grid, workers=workers, chunk_size=chunk_size)


def _signal_spectrum(f, length):
    """f_hat(omega_k) = dx * sum_n f(x_n) exp(-i omega_k x_n) on the DFT frequencies of the given length."""
    omega = angular_frequencies(length, f.grid.step)
    spectrum = f.grid.step * np.exp(-1j * omega * f.grid.start) * np.fft.fft(f.values, n=length)
    return omega, spectrum


def forward_fourier_slice(f, psi, param_grid, workers=None, chunk_size=None):
    """
    Ridgelet transform of a signal through the Fourier slice theorem

    In polar coordinates u = sgn(a), alpha = 1 / |a|, beta = b / |a|:

        T(u, alpha, beta) = 1 / (2 pi) * integral f_hat(omega u) conj(psi_hat(alpha omega)) alpha^(1-s)
                            exp(i omega beta) domega

    Each direction is one inverse DFT on a beta lattice refined by zero padding, then interpolated linearly to
    beta = b_j / |a_i|. The beta period covers |b| / |a| for |a| >= 1; smaller |a| alias and are not meant to agree
    with forward_1d.
    """
    _check_dimensions(f, psi, param_grid)
    a, b = param_grid.a_axes[0].points(), param_grid.b_axis.points()
    dx = f.grid.step
    beta_reach = np.max(np.abs(b)) / FOURIER_SLICE_MIN_A + FOURIER_SLICE_BETA_MARGIN
    length = padded_length(max(f.grid.count, int(math.ceil(2.0 * beta_reach / dx))))
    refined = FOURIER_SLICE_REFINEMENT * length
    omega, spectrum = _signal_spectrum(f, length)
    mirrored = np.roll(spectrum[::-1], 1)
    d_omega = omega[1] - omega[0]
    beta_step = 2.0 * np.pi / (refined * d_omega)
    beta_lattice = (np.arange(refined) - refined // 2) * beta_step
    half = length // 2
    a_min = default_a_min(param_grid)
    ridgenet_logger.debug('forward_fourier_slice: DFT length %d refined to %d, beta step %.3g'
                          % (length, refined, beta_step))

    def transform_rows(start, stop):
        rows = np.zeros((stop - start, b.size), dtype=complex)
        for offset, a_value in enumerate(a[start:stop]):
            if abs(a_value) < a_min:
                continue
            alpha = 1.0 / abs(a_value)
            slice_spectrum = spectrum if a_value > 0 else mirrored
            integrand = slice_spectrum * np.conj(psi.fourier(alpha * omega)) * alpha ** (1 - WEIGHT_EXPONENT)
            padded = np.zeros(refined, dtype=complex)
            padded[:half] = integrand[:half]
            padded[refined - (length - half):] = integrand[half:]
            field = np.fft.fftshift(np.fft.ifft(padded)) * refined * d_omega / (2.0 * np.pi)
            beta = b / abs(a_value)
            rows[offset] = np.interp(beta, beta_lattice, field.real) + 1j * np.interp(beta, beta_lattice, field.imag)
        return rows

    blocks = map_chunks(transform_rows, a.size, workers=workers, chunk_size=chunk_size)
    return RidgeletCoefficients(param_grid, np.concatenate(blocks, axis=0))


def save_coefficients(coefficients, path):
    """CSV with one row per parameter cell: a (a1, a2 for images), b, re, im."""
    param_grid = coefficients.param_grid
    a_vectors = np.repeat(param_grid.a_vectors(), param_grid.b_axis.count, axis=0)
    b = np.tile(param_grid.b_axis.points(), param_grid.a_count)
    a_columns = ['a'] if param_grid.m == 1 else ['a%d' % (axis + 1) for axis in range(param_grid.m)]
    frame = pd.DataFrame(a_vectors, columns=a_columns)
    frame['b'] = b
    frame['re'] = coefficients.values.real.ravel()
    frame['im'] = coefficients.values.imag.ravel()
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
