import collections
import os

from activations.activation import parse_activation
from admissibility.ridgelet_spec import parse_ridgelet
from core_grids.exceptions import InvalidArgumentException
from core_grids.grids import ParamGrid, symmetric_grid, square_image_grids
from core_grids.io import load_signal_csv, load_image_csv
from experiments.constants import (TARGET_SINE, X_HALF_WIDTH, X_STEP, A_RANGE_1D, A_STEP_1D, B_RANGE_1D, B_STEP_1D,
                                   N_2D, A_RANGE_2D, A_STEP_2D, B_RANGE_2D, B_STEP_2D, N_FULL, A_RANGE_FULL)
from phantoms.constants import PHANTOM_KINDS
from phantoms.phantoms import sine_signal, make_phantom
from ridgenet.config import WORKERS, OUTPUT_DIR

GridFlags = collections.namedtuple('GridFlags', ['a_range', 'a_step', 'b_range', 'b_step', 'x_step', 'n'])


class ExperimentConfig(collections.namedtuple('ExperimentConfig', ['target', 'psi', 'eta', 'grids', 'samples',
                                                                   'output_dir', 'workers'])):
    """
    Everything a pipeline run needs, with every name already resolved

    Attributes:
        target (str): 'sine', a phantom kind or the path of a CSV file
        psi (RidgeletSpec): ridgelet, None when it is to be constructed from eta
        eta (ActivationSpec): activation
        grids (ParamGrid): (a, b) lattice
        samples (Grid1D or tuple): sample grid of the target, (grid_x, grid_y) for images
        output_dir (str): directory receiving the output files
        workers (int): thread pool size
    """
    __slots__ = ()

    @property
    def m(self):
        return self.grids.m

    def output_path(self, file_name):
        return os.path.join(self.output_dir, file_name)


def build_param_grid(m, flags):
    a_axis = symmetric_grid(flags.a_range, flags.a_step)
    b_axis = symmetric_grid(flags.b_range, flags.b_step)
    return ParamGrid([a_axis] * m, b_axis)


def build_samples(m, flags):
    if m == 1:
        return symmetric_grid(X_HALF_WIDTH, flags.x_step)
    return square_image_grids(flags.n)


def make_config(target, psi_name, eta_name, m, flags, output_dir=None, workers=None):
    """
    Resolve names and grid flags into an ExperimentConfig

    Raises:
        InvalidArgumentException: if a grid is invalid or the ridgelet name cannot be resolved
        UnknownActivationException: if the activation name cannot be resolved
    """
    if m not in (1, 2):
        raise InvalidArgumentException('Experiments run for m in {1, 2}, got %r' % (m,))
    if workers is not None and workers < 1:
        raise InvalidArgumentException('--workers must be at least 1, got %r' % (workers,))
    psi = parse_ridgelet(psi_name, m) if psi_name else None
    eta = parse_activation(eta_name)
    return ExperimentConfig(target=target, psi=psi, eta=eta, grids=build_param_grid(m, flags),
                            samples=build_samples(m, flags), output_dir=output_dir or OUTPUT_DIR,
                            workers=workers or WORKERS)


def load_target(config):
    """
    The target function: the sine signal, a named phantom or a CSV file (x,value or x,y,value)

    Raises:
        InvalidArgumentException: if the name is unknown for the dimension
        IOError: if the CSV file cannot be read
    """
    if config.m == 1:
        if config.target == TARGET_SINE:
            return sine_signal(config.samples)
        if config.target in PHANTOM_KINDS:
            raise InvalidArgumentException('Phantom %r is an image, the run is one-dimensional' % config.target)
        return load_signal_csv(config.target)
    if config.target in PHANTOM_KINDS:
        return make_phantom(config.target, config.samples[0].count, workers=config.workers)
    if config.target == TARGET_SINE:
        raise InvalidArgumentException('The sine target is a signal, the run is two-dimensional')
    return load_image_csv(config.target)


def ensure_output_dir(config):
    if not os.path.isdir(config.output_dir):
        os.makedirs(config.output_dir)
    return config.output_dir


GRID_DEFAULTS_1D = GridFlags(A_RANGE_1D, A_STEP_1D, B_RANGE_1D, B_STEP_1D, X_STEP, N_2D)
GRID_DEFAULTS_2D = GridFlags(A_RANGE_2D, A_STEP_2D, B_RANGE_2D, B_STEP_2D, X_STEP, N_2D)
GRID_DEFAULTS_FULL = GRID_DEFAULTS_2D._replace(a_range=A_RANGE_FULL, n=N_FULL)
