import collections
import math

import numpy as np

from core_grids.constants import GRID_STOP_SLACK, GRID_COMPARE_ATOL
from core_grids.exceptions import InvalidArgumentException, GridMismatchException


class Grid1D(collections.namedtuple('Grid1D', ['start', 'step', 'count'])):
    """
    Uniform lattice point(i) = start + i * step, 0 <= i < count

    Used for sample positions x_n, ridge directions a_i and offsets b_j alike.
    """
    __slots__ = ()

    def __new__(cls, start, step, count):
        if not step > 0:
            raise InvalidArgumentException('Grid step must be positive, got %r' % (step,))
        if int(count) < 1:
            raise InvalidArgumentException('Grid count must be at least 1, got %r' % (count,))
        return super(Grid1D, cls).__new__(cls, float(start), float(step), int(count))

    def point(self, i):
        return self.start + i * self.step

    def points(self):
        return self.start + np.arange(self.count) * self.step

    def index_of(self, value):
        return int(round((value - self.start) / self.step))

    @property
    def stop(self):
        return self.point(self.count - 1)

    def matches(self, other):
        return self.count == other.count and \
            abs(self.start - other.start) <= GRID_COMPARE_ATOL and \
            abs(self.step - other.step) <= GRID_COMPARE_ATOL


def linspace(start, stop, step):
    """
    Closed lattice from start with the given step, up to the last point not exceeding stop

    Args:
        start (float): first lattice point
        stop (float): upper end of the interval, included when it lies on the lattice
        step (float): lattice spacing, must be positive

    Returns:
        Grid1D: count = floor((stop - start) / step) + 1

    Raises:
        InvalidArgumentException: if step is not positive or stop < start

    Examples:
        >>> linspace(-1, 1, 0.01)
        Grid1D(start=-1.0, step=0.01, count=201)
    """
    if not step > 0:
        raise InvalidArgumentException('Grid step must be positive, got %r' % (step,))
    if stop < start:
        raise InvalidArgumentException('Grid stop %r is smaller than start %r' % (stop, start))
    # slack absorbs the representation error of decimal steps such as 0.1
    count = int(math.floor((stop - start) / step + GRID_STOP_SLACK)) + 1
    return Grid1D(start, step, count)


def symmetric_grid(half_width, step):
    return linspace(-half_width, half_width, step)


def _finite_or_raise(values, what):
    if not np.all(np.isfinite(values)):
        raise InvalidArgumentException('%s contains non-finite values' % what)


class SampledSignal(object):
    """
    Real function sampled on a Grid1D
    """
    def __init__(self, grid, values):
        values = np.asarray(values, dtype=float)
        if values.ndim != 1 or values.shape[0] != grid.count:
            raise InvalidArgumentException('Signal has %d values for a grid of %d points'
                                           % (values.size, grid.count))
        _finite_or_raise(values, 'Signal')
        values.setflags(write=False)
        self.grid = grid
        self.values = values

    @property
    def dim(self):
        return 1

    def points(self):
        return self.grid.points()

    def same_grid(self, other):
        return isinstance(other, SampledSignal) and self.grid.matches(other.grid)

    def with_values(self, values):
        return SampledSignal(self.grid, values)

    def norm(self):
        return float(np.sqrt(np.sum(self.values ** 2) * self.grid.step))


class SampledImage(object):
    """
    Real function sampled on grid_x x grid_y, stored row-major as values[iy, ix]
    """
    def __init__(self, grid_x, grid_y, values):
        values = np.asarray(values, dtype=float)
        if values.size != grid_x.count * grid_y.count:
            raise InvalidArgumentException('Image has %d values for a %dx%d grid'
                                           % (values.size, grid_x.count, grid_y.count))
        values = values.reshape(grid_y.count, grid_x.count)
        _finite_or_raise(values, 'Image')
        values.setflags(write=False)
        self.grid_x = grid_x
        self.grid_y = grid_y
        self.values = values

    @property
    def dim(self):
        return 2

    @property
    def pixel_area(self):
        return self.grid_x.step * self.grid_y.step

    def mesh(self):
        """Coordinates (x, y) of every pixel, each shaped like values."""
        return np.meshgrid(self.grid_x.points(), self.grid_y.points())

    def same_grid(self, other):
        return isinstance(other, SampledImage) and self.grid_x.matches(other.grid_x) and \
            self.grid_y.matches(other.grid_y)

    def with_values(self, values):
        return SampledImage(self.grid_x, self.grid_y, values)

    def interior(self, border_fraction):
        """
        Crop border_fraction of the pixels away on every side

        Args:
            border_fraction (float): fraction of the width removed on each side, in [0, 0.5)

        Returns:
            SampledImage: the cropped image on the corresponding sub-grids
        """
        if not 0 <= border_fraction < 0.5:
            raise InvalidArgumentException('border_fraction must lie in [0, 0.5), got %r' % (border_fraction,))
        cut_x = int(round(border_fraction * self.grid_x.count))
        cut_y = int(round(border_fraction * self.grid_y.count))
        grid_x = Grid1D(self.grid_x.point(cut_x), self.grid_x.step, self.grid_x.count - 2 * cut_x)
        grid_y = Grid1D(self.grid_y.point(cut_y), self.grid_y.step, self.grid_y.count - 2 * cut_y)
        return SampledImage(grid_x, grid_y,
                            self.values[cut_y:self.grid_y.count - cut_y, cut_x:self.grid_x.count - cut_x])


def square_image_grids(n):
    """Pixel-center grids of an n x n image tiling [-1, 1]^2 with square cells of side 2 / n."""
    grid = Grid1D(-1.0 + 1.0 / n, 2.0 / n, n)
    return grid, grid


class ParamGrid(object):
    """
    Cartesian lattice of hidden-unit parameters (a, b), one Grid1D per input dimension for a plus one for b
    """
    def __init__(self, a_axes, b_axis):
        a_axes = tuple(a_axes)
        if not a_axes:
            raise InvalidArgumentException('ParamGrid needs at least one a-axis')
        self.a_axes = a_axes
        self.b_axis = b_axis

    @property
    def m(self):
        return len(self.a_axes)

    @property
    def shape(self):
        return tuple(axis.count for axis in self.a_axes) + (self.b_axis.count,)

    @property
    def size(self):
        return int(np.prod(self.shape))

    @property
    def a_count(self):
        return int(np.prod([axis.count for axis in self.a_axes]))

    @property
    def cell_measure(self):
        return float(np.prod([axis.step for axis in self.a_axes]) * self.b_axis.step)

    @property
    def a_step(self):
        return min(axis.step for axis in self.a_axes)

    @property
    def a_max(self):
        return max(max(abs(axis.start), abs(axis.stop)) for axis in self.a_axes)

    def a_vectors(self):
        """All a-lattice points in lexicographic order, shape (a_count, m)."""
        mesh = np.meshgrid(*[axis.points() for axis in self.a_axes], indexing='ij')
        return np.stack([component.ravel() for component in mesh], axis=-1)

    def matches(self, other):
        return self.m == other.m and self.b_axis.matches(other.b_axis) and \
            all(mine.matches(theirs) for mine, theirs in zip(self.a_axes, other.a_axes))


class RidgeletCoefficients(object):
    """
    Complex field T(a, b) on a ParamGrid, stored with shape (a_count, b_count), a lexicographic
    """
    def __init__(self, param_grid, values):
        values = np.asarray(values, dtype=complex)
        if values.size != param_grid.size:
            raise InvalidArgumentException('Coefficient field has %d values for a grid of %d cells'
                                           % (values.size, param_grid.size))
        values = values.reshape(param_grid.a_count, param_grid.b_axis.count)
        _finite_or_raise(values, 'Coefficient field')
        values.setflags(write=False)
        self.param_grid = param_grid
        self.values = values


def relative_l2_error(approx, reference):
    """
    ||approx - reference|| / ||reference||, or ||approx|| when the reference is identically zero

    Args:
        approx (SampledSignal or SampledImage): approximation
        reference (SampledSignal or SampledImage): reference on the same grid

    Returns:
        float: non-negative relative error

    Raises:
        GridMismatchException: if the operands are sampled on different grids
    """
    if not approx.same_grid(reference):
        raise GridMismatchException()
    reference_norm = np.linalg.norm(reference.values)
    difference_norm = np.linalg.norm(approx.values - reference.values)
    if reference_norm == 0:
        return float(difference_norm)
    return float(difference_norm / reference_norm)
