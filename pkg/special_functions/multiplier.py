import collections

import numpy as np

from core_grids.exceptions import InvalidArgumentException
from special_functions.gaussian import i_power


class SpectralMultiplier(collections.namedtuple('SpectralMultiplier', ['m'])):
    """
    Backprojection filter Lambda^m as the Fourier multiplier i^m |omega|^m

    Lambda^m is d^m for even m and H d^m for odd m; the value at omega = 0 is 0.
    """
    __slots__ = ()

    def __call__(self, omega):
        omega = np.asarray(omega, dtype=float)
        return i_power(self.m) * np.abs(omega) ** self.m * (omega != 0)


class SignMultiplier(object):
    """Multiplier sgn(omega) of the Hilbert transform, zero at DC."""

    def __call__(self, omega):
        return np.sign(np.asarray(omega, dtype=float)).astype(complex)


def padded_length(length, oversample=1):
    """Smallest power of two that is >= oversample * length."""
    target = max(int(oversample * length), 1)
    return 1 << (target - 1).bit_length()


def angular_frequencies(length, step):
    return 2.0 * np.pi * np.fft.fftfreq(length, d=step)


def transform_length(length, oversample=1):
    """DFT length used by apply_multiplier: the exact length, or a padded power of two when oversampling."""
    if oversample <= 1:
        return length
    return padded_length(length, oversample)


def apply_multiplier(signal, step, multiplier, oversample=1, axis=-1):
    """
    Filter samples with a Fourier multiplier: inverse-DFT(multiplier(omega_k) * DFT(signal))

    With oversample=1 the DFT runs at the exact signal length, so multipliers compose exactly (Lambda^a then
    Lambda^b is Lambda^(a+b), and H twice is the identity off DC). With oversample > 1 the signal is zero-padded to
    a power of two of at least oversample times its length and cropped back afterwards, which approximates linear
    convolution when the support sits well inside the padded window. The DC bin is always zeroed.

    Args:
        signal (numpy.ndarray): real or complex samples, length >= 2 along axis
        step (float): sample spacing
        multiplier (callable): omega -> complex gain, e.g. SpectralMultiplier(m)
        oversample (int): padding factor, 1 for no padding
        axis (int): axis along which to filter

    Returns:
        numpy.ndarray: complex filtered samples, same shape as signal

    Raises:
        InvalidArgumentException: if there are fewer than two samples or step is not positive
    """
    signal = np.asarray(signal)
    if signal.ndim == 0 or signal.shape[axis] < 2:
        raise InvalidArgumentException('Spectral filtering needs at least two samples')
    if not step > 0:
        raise InvalidArgumentException('Sample step must be positive, got %r' % (step,))
    length = signal.shape[axis]
    n_fft = transform_length(length, oversample)
    gain = np.array(multiplier(angular_frequencies(n_fft, step)), dtype=complex)
    gain[0] = 0.0
    shape = [1] * signal.ndim
    shape[axis] = n_fft
    spectrum = np.fft.fft(signal, n=n_fft, axis=axis) * gain.reshape(shape)
    filtered = np.fft.ifft(spectrum, axis=axis)
    if n_fft == length:
        return filtered
    return np.take(filtered, np.arange(length), axis=axis)


def hilbert_discrete(signal, step, oversample=1, axis=-1):
    """Hilbert transform with multiplier sgn(omega) (so that H applied twice is the identity off DC)."""
    return apply_multiplier(signal, step, SignMultiplier(), oversample=oversample, axis=axis)
