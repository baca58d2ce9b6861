import io
import json
import math

import numpy as np
from scipy.signal import windows

from core_grids.constants import FLOAT_FORMAT
from core_grids.exceptions import GridMismatchException
from experiments.constants import METRICS_SCHEMA, BAND_OVERSAMPLE, HIGH_BAND
from special_functions.multiplier import padded_length, angular_frequencies


def _format_value(value):
    if value is None or isinstance(value, bool):
        return json.dumps(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return FLOAT_FORMAT % value if math.isfinite(value) else 'null'
    return json.dumps(value)


def dumps_metrics(metrics):
    """
    JSON object of a flat metrics mapping, schema key first, floats with 17 significant digits

    json.dumps would write the shortest round-trip repr instead, which is why floats are formatted here.
    """
    items = [('schema', METRICS_SCHEMA)] + [(key, value) for key, value in metrics.items() if key != 'schema']
    lines = ['  %s: %s' % (json.dumps(key), _format_value(value)) for key, value in items]
    return '{\n' + ',\n'.join(lines) + '\n}\n'


def write_metrics(metrics, path):
    with io.open(path, 'w', encoding='utf-8') as metrics_file:
        metrics_file.write(dumps_metrics(metrics))


def read_metrics(path):
    with io.open(path, 'r', encoding='utf-8') as metrics_file:
        return json.load(metrics_file)


def _steps(sample):
    if sample.dim == 1:
        return (sample.grid.step,)
    return sample.grid_y.step, sample.grid_x.step


def _taper(shape):
    """Separable Hann taper, zero on the border samples."""
    taper = np.ones(shape)
    for axis, length in enumerate(shape):
        profile = windows.hann(length)
        taper = taper * profile.reshape([length if index == axis else 1 for index in range(len(shape))])
    return taper


def _spectrum(sample):
    """
    DFT of the Hann-tapered, zero-padded samples and the radial angular frequency of every bin

    A reconstruction need not vanish on the border of its window. Without the taper that truncation step leaks into
    every band and dominates the high band of smooth signals.
    """
    values = np.asarray(sample.values)
    shape = tuple(padded_length(length, BAND_OVERSAMPLE) for length in values.shape)
    spectrum = np.fft.fftn(values * _taper(values.shape), s=shape)
    axes = np.meshgrid(*[angular_frequencies(length, step) for length, step in zip(shape, _steps(sample))],
                       indexing='ij')
    radius = np.sqrt(sum(axis ** 2 for axis in axes))
    return spectrum, radius


def band_energy(sample, low=0.0, high=None):
    """Spectral energy in low < |omega| <= high (no upper bound when high is None)."""
    spectrum, radius = _spectrum(sample)
    band = radius > low
    if high is not None:
        band &= radius <= high
    return float(np.sum(np.abs(spectrum[band]) ** 2))


def band_correlation(approx, reference, high):
    """
    Correlation coefficient of the two spectra restricted to |omega| <= high, 0 if either is empty there

    Raises:
        GridMismatchException: if the samples live on different grids
    """
    if not approx.same_grid(reference):
        raise GridMismatchException()
    approx_spectrum, radius = _spectrum(approx)
    reference_spectrum, _ = _spectrum(reference)
    band = radius <= high
    approx_band, reference_band = approx_spectrum[band], reference_spectrum[band]
    norms = np.linalg.norm(approx_band) * np.linalg.norm(reference_band)
    if norms == 0:
        return 0.0
    return float(np.real(np.vdot(reference_band, approx_band)) / norms)


def high_band_ratio(approx, reference, high=HIGH_BAND):
    """High-band energy of approx relative to that of reference, None when the reference has none."""
    reference_energy = band_energy(reference, high)
    if reference_energy == 0:
        return None
    return band_energy(approx, high) / reference_energy


def max_abs_error(approx, reference):
    if not approx.same_grid(reference):
        raise GridMismatchException()
    return float(np.max(np.abs(approx.values - reference.values)))
