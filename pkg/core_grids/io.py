import numpy as np
import pandas as pd

from core_grids.constants import FLOAT_FORMAT, PGM_MAX_VALUE
from core_grids.exceptions import InvalidArgumentException
from core_grids.grids import Grid1D, SampledSignal, SampledImage
from ridgenet.config import ridgenet_logger


def save_signal_csv(signal, path):
    frame = pd.DataFrame({'x': signal.points(), 'value': signal.values}, columns=['x', 'value'])
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def save_image_csv(image, path):
    x, y = image.mesh()
    frame = pd.DataFrame({'x': x.ravel(), 'y': y.ravel(), 'value': image.values.ravel()},
                         columns=['x', 'y', 'value'])
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def _grid_from_points(points):
    points = np.unique(np.asarray(points, dtype=float))
    if points.size == 1:
        return Grid1D(points[0], 1.0, 1)
    steps = np.diff(points)
    step = float(np.mean(steps))
    if not np.allclose(steps, step, rtol=1e-6, atol=1e-12):
        raise InvalidArgumentException('Sample positions are not uniformly spaced')
    return Grid1D(points[0], step, points.size)


def load_signal_csv(path):
    """
    Read a signal written by save_signal_csv (header x,value)

    Raises:
        InvalidArgumentException: if the columns are missing or the positions are not uniform
    """
    frame = pd.read_csv(path, float_precision='round_trip')
    if 'x' not in frame.columns or 'value' not in frame.columns:
        raise InvalidArgumentException('Signal CSV %s must have the columns x,value' % path)
    frame = frame.sort_values('x')
    grid = _grid_from_points(frame['x'].values)
    ridgenet_logger.debug('Loaded signal of %d samples from %s' % (grid.count, path))
    return SampledSignal(grid, frame['value'].values)


def load_image_csv(path):
    frame = pd.read_csv(path, float_precision='round_trip')
    if not {'x', 'y', 'value'}.issubset(frame.columns):
        raise InvalidArgumentException('Image CSV %s must have the columns x,y,value' % path)
    frame = frame.sort_values(['y', 'x'])
    grid_x = _grid_from_points(frame['x'].values)
    grid_y = _grid_from_points(frame['y'].values)
    return SampledImage(grid_x, grid_y, frame['value'].values)


def to_pgm_bytes(values):
    """
    8-bit binary PGM (P5) of a 2D array, min-max normalized, first row at the top of the picture (largest y)
    """
    values = np.asarray(values, dtype=float)
    low, high = float(values.min()), float(values.max())
    span = high - low
    if span > 0:
        scaled = (values - low) / span
    else:
        scaled = np.zeros_like(values)
    pixels = np.round(scaled * PGM_MAX_VALUE).astype(np.uint8)[::-1]
    header = 'P5\n%d %d\n%d\n' % (pixels.shape[1], pixels.shape[0], PGM_MAX_VALUE)
    return header.encode('ascii') + pixels.tobytes()


def save_pgm(values, path):
    with open(path, 'wb') as pgm_file:
        pgm_file.write(to_pgm_bytes(values))
