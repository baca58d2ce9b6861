"""
Experiment pipelines behind the management commands, free of any file handling
"""
import collections
import time

from admissibility.admissibility import compute_K, effective_K
from core_grids.grids import relative_l2_error
from experiments.constants import INTERIOR_BORDER, LOW_BAND
from experiments.metrics import band_correlation, high_band_ratio, max_abs_error
from radon.radon import ridgelet_vs_fbp
from ridgelet.network import dual_transform, synthesize_network, evaluate_network
from ridgelet.transforms import forward
from ridgenet.config import ridgenet_logger

ReconstructionRun = collections.namedtuple('ReconstructionRun', ['target', 'coefficients', 'reconstruction',
                                                                 'report', 'K', 'wall_time_s'])


def sample_points(sample):
    """Evaluation points of a sampled function as the network evaluator expects them."""
    if sample.dim == 1:
        return sample.grid
    return sample.grid_x, sample.grid_y


def reconstruct(target, psi, eta, param_grid, workers=None):
    """
    Forward transform followed by the dual transform, normalized by the effective K of the pair

    Non-admissible pairs are reconstructed too, with a warning; their outputs are the failure modes of the method.
    """
    started = time.time()
    report = compute_K(psi, eta)
    K = effective_K(report, psi, eta, param_grid.a_max)
    if not report.admissible:
        ridgenet_logger.warning('(%s, %s) is %s, reconstructing with the normalization %r'
                                % (psi.name, eta.name, report.classification, K))
    coefficients = forward(target, psi, param_grid, workers=workers)
    reconstruction = dual_transform(coefficients, eta, K, sample_points(target), workers=workers)
    return ReconstructionRun(target, coefficients, reconstruction, report, K, time.time() - started)


def reconstruction_metrics(run):
    """Error and spectral metrics of a ReconstructionRun; images are compared on their interior."""
    target, reconstruction = run.target, run.reconstruction
    if target.dim == 2:
        target, reconstruction = target.interior(INTERIOR_BORDER), reconstruction.interior(INTERIOR_BORDER)
    return collections.OrderedDict([
        ('relative_l2', relative_l2_error(reconstruction, target)),
        ('max_abs_err', max_abs_error(reconstruction, target)),
        ('K_re', run.K.real),
        ('K_im', run.K.imag),
        ('classification', run.report.classification),
        ('high_band_ratio', high_band_ratio(run.reconstruction, run.target)),
        ('low_band_correlation', band_correlation(run.reconstruction, run.target, LOW_BAND)),
        ('wall_time_s', run.wall_time_s),
    ])


SynthesisRun = collections.namedtuple('SynthesisRun', ['target', 'network', 'evaluation', 'wall_time_s'])


def synthesize(target, eta, param_grid, psi=None, workers=None):
    started = time.time()
    network = synthesize_network(target, eta, param_grid, psi=psi, workers=workers)
    evaluation = evaluate_network(network, sample_points(target), workers=workers)
    return SynthesisRun(target, network, evaluation, time.time() - started)


def synthesis_metrics(run):
    return collections.OrderedDict([
        ('relative_l2', relative_l2_error(run.evaluation, run.target)),
        ('max_abs_err', max_abs_error(run.evaluation, run.target)),
        ('units', len(run.network)),
        ('K_re', run.network.K.real),
        ('K_im', run.network.K.imag),
        ('eta', run.network.eta.name),
        ('wall_time_s', run.wall_time_s),
    ])


RadonRun = collections.namedtuple('RadonRun', ['target', 'comparison', 'wall_time_s'])


def compare_with_fbp(target, psi, eta, param_grid, workers=None):
    started = time.time()
    comparison = ridgelet_vs_fbp(target, psi, eta, param_grid, workers=workers)
    return RadonRun(target, comparison, time.time() - started)


def radon_metrics(run):
    comparison = run.comparison
    target = run.target.interior(INTERIOR_BORDER)
    return collections.OrderedDict([
        ('deviation', comparison.deviation),
        ('fbp_relative_l2', relative_l2_error(comparison.fbp.interior(INTERIOR_BORDER), target)),
        ('ridgelet_relative_l2', relative_l2_error(comparison.ridgelet.interior(INTERIOR_BORDER), target)),
        ('K_re', comparison.report.K.real),
        ('K_im', comparison.report.K.imag),
        ('classification', comparison.report.classification),
        ('wall_time_s', run.wall_time_s),
    ])


def estimated_cost(param_grid, samples):
    """Unit x sample products of one forward or one dual transform."""
    sample_count = samples.count if hasattr(samples, 'count') else samples[0].count * samples[1].count
    return float(param_grid.size) * sample_count
