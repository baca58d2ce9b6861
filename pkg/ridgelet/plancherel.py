"""
Parseval relation and Plancherel identity of the ridgelet transform, checked on the discrete lattice

With s = 1 the parameter-space measure alpha^-m dalpha dbeta du of the polar coordinates (alpha = 1 / ||a||,
beta = b / ||a||, u = a / ||a||) pulls back to da db / ||a||^2 on the Cartesian lattice, so

    <R f, R g> ~ sum over cells T_f(a, b) conj(T_g(a, b)) da db / ||a||^2

for a ridgelet normalized to K_{psi,psi} = 1. Cells with ||a|| < a_min are skipped as in the dual transform.
"""
import numpy as np

from admissibility.admissibility import compute_K
from core_grids.exceptions import InvalidArgumentException, GridMismatchException
from ridgelet.transforms import default_a_min, forward
from ridgenet.config import ridgenet_logger


def self_normalized(psi):
    """
    psi / sqrt(K_{psi,psi})

    Raises:
        InvalidArgumentException: if psi is not self-admissible with a real positive constant
    """
    report = compute_K(psi, psi)
    K = report.K
    if not report.admissible or K.real <= 0 or abs(K.imag) > 1e-9 * abs(K):
        raise InvalidArgumentException('%s is not self-admissible (K = %r, %s)' % (psi.name, K, report.classification))
    ridgenet_logger.debug('K(%s, %s) = %r' % (psi.name, psi.name, K))
    return psi.normalized(K.real)


def _parameter_weights(param_grid, a_min):
    norms = np.linalg.norm(param_grid.a_vectors(), axis=-1)
    weights = np.zeros_like(norms)
    kept = norms >= a_min
    weights[kept] = param_grid.cell_measure / norms[kept] ** 2
    return weights


def parseval_check(f, g, psi, param_grid, a_min=None, workers=None):
    """
    (<R f, R g> on the lattice, <f, g>) for the self-normalized psi

    Returns:
        tuple: (complex, complex)
    """
    if not f.same_grid(g):
        raise GridMismatchException()
    psi = self_normalized(psi)
    a_min = default_a_min(param_grid) if a_min is None else a_min
    weights = _parameter_weights(param_grid, a_min)
    transform_f = forward(f, psi, param_grid, workers=workers).values
    transform_g = transform_f if g is f else forward(g, psi, param_grid, workers=workers).values
    lhs = np.sum(np.sum(transform_f * np.conj(transform_g), axis=-1) * weights)
    cell = f.grid.step if f.dim == 1 else f.pixel_area
    rhs = np.sum(f.values * g.values) * cell
    return complex(lhs), complex(rhs)


def plancherel_check(f, psi, param_grid, a_min=None, workers=None):
    """
    (||R f||^2 on the lattice, ||f||^2) for the self-normalized psi

    Raises:
        InvalidArgumentException: if psi is not self-admissible
    """
    lhs, rhs = parseval_check(f, f, psi, param_grid, a_min=a_min, workers=workers)
    return lhs.real, rhs.real
