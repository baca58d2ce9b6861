"""
One-hidden-layer networks g(x) = Re[(1 / K) sum_j c_j eta(a_j . x - b_j)] obtained by discretizing the dual ridgelet
transform, i.e. without any training loop
"""
import io

import numpy as np
import pandas as pd

from activations.activation import parse_activation
from activations.constants import DIRAC_DELTA, DIRAC_DERIVATIVE
from admissibility.admissibility import compute_K, construct_admissible
from admissibility.exceptions import NonAdmissiblePairException
from core_grids.constants import FLOAT_FORMAT
from core_grids.exceptions import InvalidArgumentException
from core_grids.grids import Grid1D, SampledSignal, SampledImage
from core_grids.parallel import map_chunks
from ridgelet.constants import (WEIGHT_EXPONENT, NETWORK_FORMAT_VERSION, IMAGINARY_RESIDUE_TOLERANCE,
                                EVALUATION_ELEMENT_BUDGET)
from ridgelet.exceptions import NetworkFormatException
from ridgelet.transforms import default_a_min, forward
from ridgenet.config import ridgenet_logger


class NetworkDescription(object):
    """
    Hidden units (a_j, b_j, c_j) of a one-hidden-layer network, its activation and normalization constant

    Attributes:
        m (int): input dimension
        a (numpy.ndarray): directions, shape (J, m)
        b (numpy.ndarray): offsets, shape (J,)
        c (numpy.ndarray): complex output weights, shape (J,)
        eta (ActivationSpec): activation
        K (complex): normalization constant
    """
    def __init__(self, m, a, b, c, eta, K):
        a = np.asarray(a, dtype=float).reshape(-1, m)
        b = np.asarray(b, dtype=float).ravel()
        c = np.asarray(c, dtype=complex).ravel()
        if not a.shape[0] or a.shape[0] != b.size or b.size != c.size:
            raise InvalidArgumentException('Network needs matching, non-empty unit arrays, got %d, %d, %d'
                                           % (a.shape[0], b.size, c.size))
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b)) and np.all(np.isfinite(c))):
            raise InvalidArgumentException('Network unit parameters must be finite')
        if K == 0:
            raise NonAdmissiblePairException()
        self.m = int(m)
        self.a, self.b, self.c = a, b, c
        self.eta = eta
        self.K = complex(K)

    def __len__(self):
        return self.b.size

    @property
    def units(self):
        return [(a_j, b_j, c_j) for a_j, b_j, c_j in zip(self.a, self.b, self.c)]

    def evaluate(self, points):
        return evaluate_network(self, points)


def network_from_coefficients(coefficients, eta, K, a_min=None):
    """
    Units of the discretized dual transform: every cell with ||a|| >= a_min, c = T(a, b) da db / ||a||

    Args:
        coefficients (RidgeletCoefficients): T on its parameter grid
        eta (ActivationSpec): activation
        K (complex): normalization constant
        a_min (float, optional): cutoff, defaults to half the a-step

    Returns:
        NetworkDescription
    """
    param_grid = coefficients.param_grid
    a_min = default_a_min(param_grid) if a_min is None else a_min
    a_vectors = param_grid.a_vectors()
    norms = np.linalg.norm(a_vectors, axis=-1)
    kept = norms >= a_min
    b = param_grid.b_axis.points()
    weights = param_grid.cell_measure / norms[kept] ** WEIGHT_EXPONENT
    c = coefficients.values[kept] * weights[:, None]
    count_b = b.size
    units_a = np.repeat(a_vectors[kept], count_b, axis=0)
    units_b = np.tile(b, int(kept.sum()))
    ridgenet_logger.debug('Network with %d units (%d directions dropped below a_min=%g)'
                          % (units_b.size, int((~kept).sum()), a_min))
    return NetworkDescription(param_grid.m, units_a, units_b, c.ravel(), eta, K)


def _evaluation_points(points, m):
    if m == 1:
        if not isinstance(points, Grid1D):
            raise InvalidArgumentException('A one-dimensional network is evaluated on a Grid1D')
        return points.points()[:, None]
    if not (isinstance(points, tuple) and len(points) == 2):
        raise InvalidArgumentException('A two-dimensional network is evaluated on a (grid_x, grid_y) pair')
    x, y = np.meshgrid(points[0].points(), points[1].points())
    return np.stack([x.ravel(), y.ravel()], axis=-1)


def evaluate_network(net, points, workers=None, chunk_size=None):
    """
    Real part of (1 / K) sum_j c_j eta(a_j . x - b_j) at every evaluation point

    Args:
        net (NetworkDescription): network
        points (Grid1D or tuple): sample grid (m = 1) or (grid_x, grid_y) (m = 2)

    Returns:
        SampledSignal or SampledImage

    Raises:
        InvalidArgumentException: if the points do not match the network dimension
    """
    coordinates = _evaluation_points(points, net.m)
    chunk_size = chunk_size or max(1, EVALUATION_ELEMENT_BUDGET // len(net))

    def evaluate_rows(start, stop):
        arguments = coordinates[start:stop].dot(net.a.T) - net.b[None, :]
        return np.sum(net.eta.eval(arguments) * net.c[None, :], axis=-1) / net.K

    blocks = map_chunks(evaluate_rows, coordinates.shape[0], workers=workers, chunk_size=chunk_size)
    values = np.concatenate(blocks)
    residue = np.linalg.norm(values.imag)
    if residue > IMAGINARY_RESIDUE_TOLERANCE * max(np.linalg.norm(values.real), 1.0):
        ridgenet_logger.warning('Reconstruction carries an imaginary residue of %.3e' % residue)
    if net.m == 1:
        return SampledSignal(points, values.real)
    return SampledImage(points[0], points[1], values.real)


def dual_transform(coefficients, eta, K, points, a_min=None, workers=None, chunk_size=None):
    """
    Discretized dual ridgelet transform Re[(1 / K) sum_ij T(a_i, b_j) eta(a_i . x - b_j) da db / ||a_i||]

    Implemented as building the network and evaluating it, so that a synthesized network reproduces this output
    exactly.

    Raises:
        NonAdmissiblePairException: if K = 0
    """
    if K == 0:
        raise NonAdmissiblePairException()
    net = network_from_coefficients(coefficients, eta, K, a_min=a_min)
    return evaluate_network(net, points, workers=workers, chunk_size=chunk_size)


def synthesize_network(f, eta, param_grid, psi=None, workers=None, chunk_size=None):
    """
    Backprop-free network synthesis: sample the ridgelet transform of f on the parameter lattice

    Args:
        f (SampledSignal or SampledImage): target
        eta (ActivationSpec): activation of the hidden layer
        param_grid (ParamGrid): lattice of (a, b)
        psi (RidgeletSpec, optional): ridgelet; constructed from eta when absent

    Returns:
        NetworkDescription

    Raises:
        ConstructionFailedException: if no admissible ridgelet exists for eta
        NonAdmissiblePairException: if an explicitly given psi is not admissible with eta
    """
    if psi is None:
        psi = construct_admissible(eta, f.dim)
    report = compute_K(psi, eta)
    if not report.admissible:
        raise NonAdmissiblePairException('(%s, %s) is %s, K cannot normalize a network'
                                         % (psi.name, eta.name, report.classification))
    coefficients = forward(f, psi, param_grid, workers=workers, chunk_size=chunk_size)
    return network_from_coefficients(coefficients, eta, report.K)


def _header(net):
    header = '%s m=%d eta=%s K=%s,%s' % (NETWORK_FORMAT_VERSION, net.m, net.eta.name,
                                         FLOAT_FORMAT % net.K.real, FLOAT_FORMAT % net.K.imag)
    if net.eta.kind in (DIRAC_DELTA, DIRAC_DERIVATIVE):
        header += ' width=%s' % (FLOAT_FORMAT % net.eta.width)
    return header


def dumps_network(net):
    columns = np.column_stack([net.a, net.b, net.c.real, net.c.imag])
    buffer = io.StringIO()
    buffer.write(_header(net) + '\n')
    pd.DataFrame(columns).to_csv(buffer, sep=' ', header=False, index=False, float_format=FLOAT_FORMAT)
    return buffer.getvalue()


def save_network(net, path):
    with io.open(path, 'w', encoding='utf-8') as network_file:
        network_file.write(dumps_network(net))


def _parse_header(line):
    tokens = line.split()
    if not tokens or tokens[0] != NETWORK_FORMAT_VERSION:
        raise NetworkFormatException('Expected a %s header, got %r' % (NETWORK_FORMAT_VERSION, line[:80]))
    fields = dict(token.split('=', 1) for token in tokens[1:] if '=' in token)
    try:
        m = int(fields['m'])
        real, imag = fields['K'].split(',')
        K = complex(float(real), float(imag))
        width = float(fields['width']) if 'width' in fields else None
        eta = parse_activation(fields['eta'], width=width)
    except (KeyError, ValueError) as e:
        raise NetworkFormatException('Malformed %s header %r: %s' % (NETWORK_FORMAT_VERSION, line, e))
    return m, eta, K


def loads_network(text):
    """
    Parse the ridgenet-v1 text format

    Raises:
        NetworkFormatException: if the header is malformed or a unit line has the wrong width
    """
    header, _, body = text.partition('\n')
    m, eta, K = _parse_header(header)
    frame = pd.read_csv(io.StringIO(body), sep=' ', header=None, float_precision='round_trip')
    if frame.shape[1] != m + 3:
        raise NetworkFormatException('Unit lines must have %d columns for m=%d, got %d' % (m + 3, m, frame.shape[1]))
    values = frame.values.astype(float)
    return NetworkDescription(m, values[:, :m], values[:, m], values[:, m + 1] + 1j * values[:, m + 2], eta, K)


def load_network(path):
    with io.open(path, 'r', encoding='utf-8') as network_file:
        return loads_network(network_file.read())
