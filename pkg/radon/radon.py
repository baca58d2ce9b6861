import collections
import math

import numpy as np
from scipy import ndimage

from admissibility.admissibility import compute_K
from admissibility.exceptions import NonAdmissiblePairException
from core_grids.grids import Grid1D, SampledImage, relative_l2_error
from core_grids.parallel import map_chunks
from radon.constants import (DEFAULT_ANGLE_COUNT, LINE_SAMPLES_PER_PIXEL, FILTER_OVERSAMPLE, FULL_TURN,
                             RADON_DIMENSION)
from ridgelet.network import dual_transform
from ridgelet.transforms import forward_2d
from ridgenet.config import ridgenet_logger
from special_functions.gaussian import i_power
from special_functions.multiplier import SpectralMultiplier, apply_multiplier


class Sinogram(collections.namedtuple('Sinogram', ['angles', 'offsets', 'values', 'covers_support'])):
    """
    Sampled Radon transform Rf(u, p), u = (cos theta, sin theta), values shaped (angles, offsets)

    covers_support is False when the offsets do not reach the image diagonal; line integrals outside them are lost
    and the per-angle mass no longer matches the image mass.
    """
    __slots__ = ()

    @property
    def half_turn(self):
        """True when the angles cover only [0, pi), the other half of the circle following by evenness."""
        return self.angles.count * self.angles.step <= math.pi + 0.5 * self.angles.step

    def mass(self):
        """Per-angle integral of Rf(u, p) dp."""
        return self.values.sum(axis=1) * self.offsets.step


def half_diagonal(image):
    return math.hypot(max(abs(image.grid_x.start), abs(image.grid_x.stop)),
                      max(abs(image.grid_y.start), abs(image.grid_y.stop)))


def default_angles(count=DEFAULT_ANGLE_COUNT):
    return Grid1D(0.0, math.pi / count, count)


def default_offsets(image):
    """Symmetric offsets with pixel-pitch spacing reaching past the image diagonal."""
    pitch = image.grid_x.step
    steps = int(math.ceil(half_diagonal(image) / pitch)) + 1
    return Grid1D(-steps * pitch, pitch, 2 * steps + 1)


def radon_2d(f, angles, offsets, workers=None):
    """
    Line integrals Rf(u, p) = integral f(p u + t u_perp) dt

    Every line is sampled at half the pixel pitch over the image diagonal and f is interpolated bilinearly.

    Args:
        f (SampledImage): image on a square domain
        angles (Grid1D): theta in radians
        offsets (Grid1D): p

    Returns:
        Sinogram
    """
    pitch = f.grid_x.step
    reach = half_diagonal(f)
    covers_support = max(abs(offsets.start), abs(offsets.stop)) >= reach - 0.5 * pitch
    if not covers_support:
        ridgenet_logger.warning('Offsets [%g, %g] do not cover the image diagonal %g'
                                % (offsets.start, offsets.stop, reach))
    line_step = pitch / LINE_SAMPLES_PER_PIXEL
    half_count = int(math.ceil((reach + pitch) / line_step))
    t = np.arange(-half_count, half_count + 1) * line_step
    p = offsets.points()
    theta = angles.points()

    def project(start, stop):
        rows = []
        for angle in theta[start:stop]:
            cos, sin = math.cos(angle), math.sin(angle)
            x = p[:, None] * cos - t[None, :] * sin
            y = p[:, None] * sin + t[None, :] * cos
            columns = (x - f.grid_x.start) / f.grid_x.step
            lines = (y - f.grid_y.start) / f.grid_y.step
            samples = ndimage.map_coordinates(f.values, [lines, columns], order=1, mode='grid-constant', cval=0.0)
            rows.append(samples.sum(axis=1) * line_step)
        return np.array(rows).reshape(stop - start, p.size)

    blocks = map_chunks(project, angles.count, workers=workers)
    return Sinogram(angles, offsets, np.concatenate(blocks, axis=0), covers_support)


def dual_radon_2d(sinogram, grid_x, grid_y, workers=None):
    """
    Backprojection R* Phi(x) = integral over the unit circle of Phi(u, u . x) du

    Phi is interpolated linearly in p (zero outside the offsets). A sinogram over [0, pi) stands for the full circle
    through Phi(-u, -p) = Phi(u, p), hence the doubled angular weight.
    """
    x, y = np.meshgrid(grid_x.points(), grid_y.points())
    offsets = sinogram.offsets.points()
    theta = sinogram.angles.points()
    weight = sinogram.angles.step * (2.0 if sinogram.half_turn else 1.0)

    def backproject(start, stop):
        image = np.zeros_like(x)
        for index in range(start, stop):
            projection = x * math.cos(theta[index]) + y * math.sin(theta[index])
            image += np.interp(projection, offsets, sinogram.values[index], left=0.0, right=0.0)
        return image

    blocks = map_chunks(backproject, sinogram.angles.count, workers=workers)
    return SampledImage(grid_x, grid_y, np.sum(blocks, axis=0) * weight)


def filter_sinogram(sinogram, m=RADON_DIMENSION):
    """
    Lambda^(m-1) along p for every angle, divided by i^(m-1)

    The multiplier i^(m-1) |omega|^(m-1) carries the phase of the Hilbert convention; dividing it out leaves the
    real ramp filter |omega|^(m-1).
    """
    filtered = apply_multiplier(sinogram.values, sinogram.offsets.step, SpectralMultiplier(m - 1),
                                oversample=FILTER_OVERSAMPLE, axis=1)
    return sinogram._replace(values=(filtered / i_power(m - 1)).real)


def filtered_backprojection(f, angles=None, offsets=None, workers=None):
    """
    R* Lambda^1 R f / (2 (2 pi)), which reproduces f by the Radon inversion formula

    Args:
        f (SampledImage): image
        angles (Grid1D, optional): defaults to 180 angles over [0, pi)
        offsets (Grid1D, optional): defaults to pixel-pitch offsets over the diagonal

    Returns:
        SampledImage
    """
    angles = angles or default_angles()
    offsets = offsets or default_offsets(f)
    sinogram = filter_sinogram(radon_2d(f, angles, offsets, workers=workers))
    backprojection = dual_radon_2d(sinogram, f.grid_x, f.grid_y, workers=workers)
    normalization = 2.0 * FULL_TURN ** (RADON_DIMENSION - 1)
    return backprojection.with_values(backprojection.values / normalization)


RidgeletRadonComparison = collections.namedtuple('RidgeletRadonComparison',
                                                 ['ridgelet', 'fbp', 'deviation', 'report'])


def ridgelet_vs_fbp(f, psi, eta, param_grid, workers=None):
    """
    The dual ridgelet reconstruction R_eta^dagger R_psi f / K next to the filtered backprojection of the same image

    Both discretize the same operator, so the two images should agree up to discretization.

    Returns:
        RidgeletRadonComparison: (ridgelet image, FBP image, relative L2 deviation, admissibility report)

    Raises:
        NonAdmissiblePairException: if (psi, eta) is not admissible
    """
    report = compute_K(psi, eta)
    if not report.admissible:
        raise NonAdmissiblePairException('(%s, %s) is %s' % (psi.name, eta.name, report.classification))
    fbp = filtered_backprojection(f, workers=workers)
    coefficients = forward_2d(f, psi, param_grid, workers=workers)
    ridgelet = dual_transform(coefficients, eta, report.K, (f.grid_x, f.grid_y), workers=workers)
    deviation = relative_l2_error(ridgelet, fbp)
    ridgenet_logger.info('ridgelet vs FBP deviation %.4f' % deviation)
    return RidgeletRadonComparison(ridgelet, fbp, deviation, report)
