import collections
import math

import numpy as np

from core_grids.exceptions import InvalidArgumentException
from core_grids.grids import SampledImage, SampledSignal, square_image_grids
from core_grids.parallel import map_chunks
from phantoms.constants import (SHEPP_LOGAN_ELLIPSES, SHEPP_LOGAN_MIN_SIZE, SUPERSAMPLE_RESOLUTION, DISPLAY_RANGE,
                                SIGNAL_FREQUENCY, BLOB_CENTER, BLOB_WIDTH, PHANTOM_SHEPP_LOGAN, PHANTOM_BLOB,
                                PHANTOM_ZERO, PHANTOM_KINDS)
from ridgenet.config import ridgenet_logger


class Ellipse(collections.namedtuple('Ellipse', ['center', 'semi_axes', 'rotation', 'intensity'])):
    """
    Constant-intensity ellipse, rotation in radians counter-clockwise from the x-axis
    """
    __slots__ = ()

    def __new__(cls, center, semi_axes, rotation, intensity):
        center = tuple(float(value) for value in center)
        semi_axes = tuple(float(value) for value in semi_axes)
        if len(center) != 2 or len(semi_axes) != 2:
            raise InvalidArgumentException('Ellipse center and semi-axes must be pairs')
        if min(semi_axes) <= 0:
            raise InvalidArgumentException('Ellipse semi-axes must be positive, got %r' % (semi_axes,))
        return super(Ellipse, cls).__new__(cls, center, semi_axes, float(rotation), float(intensity))

    def contains(self, x, y):
        dx = np.asarray(x) - self.center[0]
        dy = np.asarray(y) - self.center[1]
        cos, sin = math.cos(self.rotation), math.sin(self.rotation)
        along = (dx * cos + dy * sin) / self.semi_axes[0]
        across = (-dx * sin + dy * cos) / self.semi_axes[1]
        return along ** 2 + across ** 2 <= 1.0


def shepp_logan_ellipses():
    return [Ellipse((x, y), (axis_x, axis_y), math.radians(degrees), intensity)
            for intensity, axis_x, axis_y, x, y, degrees in SHEPP_LOGAN_ELLIPSES]


def render_ellipses(ellipses, x, y):
    values = np.zeros(np.broadcast(x, y).shape)
    for ellipse in ellipses:
        values += np.where(ellipse.contains(x, y), ellipse.intensity, 0.0)
    return values


def sine_signal(grid):
    """sin(2 pi x) sampled on grid."""
    return SampledSignal(grid, np.sin(SIGNAL_FREQUENCY * grid.points()))


def shepp_logan(n, workers=None):
    """
    The original Shepp-Logan head phantom on an n x n grid over [-1, 1]^2

    Every pixel holds the mean of a regular subsample lattice, SUPERSAMPLE_RESOLUTION points per side in total,
    so ellipse edges are anti-aliased and the image is consistent across resolutions. Values are the raw sums of
    the ellipse intensities (up to 2 on the skull); use display_values to clamp for output.

    Args:
        n (int): pixels per side, at least 16

    Returns:
        SampledImage

    Raises:
        InvalidArgumentException: if n < 16
    """
    if int(n) != n or n < SHEPP_LOGAN_MIN_SIZE:
        raise InvalidArgumentException('Shepp-Logan phantom needs n >= %d, got %r' % (SHEPP_LOGAN_MIN_SIZE, n))
    n = int(n)
    grid_x, grid_y = square_image_grids(n)
    subsamples = max(1, int(math.ceil(float(SUPERSAMPLE_RESOLUTION) / n)))
    ridgenet_logger.debug('Shepp-Logan %dx%d with %d^2 subsamples per pixel' % (n, n, subsamples))
    ellipses = shepp_logan_ellipses()
    offsets = ((np.arange(subsamples) + 0.5) / subsamples - 0.5) * grid_x.step
    x_sub = (grid_x.points()[:, None] + offsets[None, :]).ravel()

    def render_rows(start, stop):
        y_sub = (grid_y.points()[start:stop, None] + offsets[None, :]).ravel()
        samples = render_ellipses(ellipses, x_sub[None, :], y_sub[:, None])
        return samples.reshape(stop - start, subsamples, n, subsamples).mean(axis=(1, 3))

    rows = map_chunks(render_rows, n, workers=workers)
    return SampledImage(grid_x, grid_y, np.concatenate(rows, axis=0))


def gaussian_blob(grids, center=BLOB_CENTER, width=BLOB_WIDTH):
    """exp(-|x - center|^2 / (2 width^2)) on grids = (grid_x, grid_y)."""
    if not width > 0:
        raise InvalidArgumentException('Blob width must be positive, got %r' % (width,))
    grid_x, grid_y = grids
    x, y = np.meshgrid(grid_x.points(), grid_y.points())
    squared = (x - center[0]) ** 2 + (y - center[1]) ** 2
    return SampledImage(grid_x, grid_y, np.exp(-squared / (2.0 * width ** 2)))


def zero_image(n):
    grid_x, grid_y = square_image_grids(n)
    return SampledImage(grid_x, grid_y, np.zeros((n, n)))


def display_values(image):
    """Pixel values clamped to the display range; the image itself keeps the raw values."""
    return np.clip(image.values, *DISPLAY_RANGE)


def make_phantom(kind, n, workers=None):
    """
    Build a named test image

    Args:
        kind (str): one of 'shepp-logan', 'blob', 'zero'
        n (int): pixels per side

    Returns:
        SampledImage
    """
    if kind == PHANTOM_SHEPP_LOGAN:
        return shepp_logan(n, workers=workers)
    if kind == PHANTOM_BLOB:
        return gaussian_blob(square_image_grids(n))
    if kind == PHANTOM_ZERO:
        return zero_image(n)
    raise InvalidArgumentException('Unknown phantom %r, expected one of %s' % (kind, ', '.join(PHANTOM_KINDS)))
