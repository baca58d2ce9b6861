import filecmp
import io
import math
import os
import shutil
import tempfile

import mock
import pandas as pd
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from experiments.constants import EXIT_USAGE, EXIT_IO, EXIT_NON_ADMISSIBLE
from experiments.metrics import read_metrics
from ridgelet import transforms as ridgelet_transforms

REDUCED_1D = ['--a-step', '0.25', '--b-step', '0.25']


class CommandTestCase(TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def path(self, *parts):
        return os.path.join(self.directory, *parts)

    def call(self, name, *args):
        out = io.StringIO()
        call_command(name, *args, stdout=out)
        return out.getvalue()

    def assertExitCode(self, returncode, name, *args):
        with self.assertRaises(CommandError) as context:
            self.call(name, *args)
        self.assertEqual(context.exception.returncode, returncode)
        return context.exception


class TestDiagnoseCommand(CommandTestCase):
    def test_table(self):
        output = self.call('diagnose', '--m', '1', '--csv', self.path('table.csv'), '--workers', '2')
        lines = output.splitlines()
        self.assertEqual(len(lines), 9)
        self.assertEqual(lines[0].split()[-3:], [u'ΛG', u'ΛG′', u'ΛG″'])
        self.assertEqual(lines[6].split(), [u'ReLU', u'∞', u'∞', u'+'])
        self.assertEqual(lines[7].split(), [u'linear', u'0', u'0', u'0'])
        frame = pd.read_csv(self.path('table.csv'))
        self.assertEqual(len(frame), 24)
        self.assertEqual(list(frame.columns), ['activation', 'psi', 'classification', 'symbol', 'K_re', 'K_im'])

    def test_parity(self):
        output = self.call('diagnose', '--parity', 'gaussian', '--orders', '1,2')
        lines = output.splitlines()
        self.assertTrue(lines[0].startswith(u'gaussian k=1 0 K='))
        self.assertTrue(lines[1].startswith(u'gaussian k=2 + K='))

    def test_usage_errors(self):
        with self.assertRaises(CommandError):
            self.call('diagnose', '--m', '3')
        self.assertExitCode(EXIT_USAGE, 'diagnose', '--parity', 'sigmoid', '--orders', '0,1')


class TestReconstruct1DCommand(CommandTestCase):
    def test_outputs(self):
        output = self.call('reconstruct1d', '--psi', 'lg2', '--eta', 'dsigmoid:1', '--out-dir', self.path('run'),
                           *REDUCED_1D)
        self.assertIn('classification=admissible', output)
        self.assertTrue(os.path.exists(self.path('run', 'coefficients.csv')))
        signal = pd.read_csv(self.path('run', 'reconstruction.csv'))
        self.assertEqual(list(signal.columns), ['x', 'value'])
        self.assertEqual(len(signal), 201)
        metrics = read_metrics(self.path('run', 'metrics.json'))
        self.assertEqual(metrics['schema'], 1)
        self.assertLessEqual(metrics['relative_l2'], 0.1)
        self.assertEqual(metrics['psi'], 'lg2')
        self.assertEqual(metrics['classification'], 'admissible')

    def test_non_admissible_pair_still_runs(self):
        self.call('reconstruct1d', '--psi', 'lg', '--eta', 'relu', '--out-dir', self.path('run'), *REDUCED_1D)
        metrics = read_metrics(self.path('run', 'metrics.json'))
        self.assertEqual(metrics['classification'], 'divergent')
        self.assertLessEqual(metrics['high_band_ratio'], 0.2)

    def test_missing_target(self):
        self.assertExitCode(EXIT_IO, 'reconstruct1d', '--target', self.path('missing.csv'),
                            '--out-dir', self.path('run'))

    def test_bad_names(self):
        self.assertExitCode(EXIT_USAGE, 'reconstruct1d', '--eta', 'swish', '--out-dir', self.path('run'))
        self.assertExitCode(EXIT_USAGE, 'reconstruct1d', '--psi', 'morlet', '--out-dir', self.path('run'))
        self.assertExitCode(EXIT_USAGE, 'reconstruct1d', '--a-step', '0', '--out-dir', self.path('run'))


class TestSynthCommand(CommandTestCase):
    def test_synthesize_and_reload(self):
        output = self.call('synth', '--eta', 'relu', '--out-dir', self.path('first'), *REDUCED_1D)
        self.assertIn('units=', output)
        metrics = read_metrics(self.path('first', 'metrics.json'))
        self.assertLessEqual(metrics['relative_l2'], 0.3)
        self.assertEqual(metrics['eta'], 'relu')
        network = self.path('first', 'network.ridgenet')
        with io.open(network, encoding='utf-8') as network_file:
            self.assertTrue(network_file.readline().startswith('ridgenet-v1 m=1 eta=relu K='))

        self.call('synth', '--network', network, '--out-dir', self.path('second'))
        self.assertTrue(filecmp.cmp(self.path('first', 'eval.csv'), self.path('second', 'eval.csv'), shallow=False))
        self.assertFalse(os.path.exists(self.path('second', 'network.ridgenet')))
        self.assertEqual(read_metrics(self.path('second', 'metrics.json'))['relative_l2'], metrics['relative_l2'])

    def test_linear_activation(self):
        error = self.assertExitCode(EXIT_NON_ADMISSIBLE, 'synth', '--eta', 'linear', '--out-dir', self.path('run'),
                                    '--a-range', '2', '--b-range', '2')
        self.assertIn('order 0: vanishing', str(error))

    def test_corrupt_network(self):
        path = self.path('broken.ridgenet')
        with io.open(path, 'w', encoding='utf-8') as network_file:
            network_file.write(u'not a network\n')
        self.assertExitCode(EXIT_IO, 'synth', '--network', path, '--out-dir', self.path('run'))


class TestImageCommands(CommandTestCase):
    def test_phantom(self):
        self.call('phantom', '--kind', 'shepp-logan', '--n', '32', '--out', self.path('phantom.pgm'))
        with io.open(self.path('phantom.pgm'), 'rb') as pgm_file:
            self.assertTrue(pgm_file.read().startswith(b'P5\n32 32\n255\n'))
        self.call('phantom', '--kind', 'blob', '--n', '16', '--out', self.path('blob.csv'))
        frame = pd.read_csv(self.path('blob.csv'))
        self.assertEqual(len(frame), 256)
        # nearest pixel centers sit at (+-1/16, +-1/16)
        self.assertAlmostEqual(frame['value'].max(), math.exp(-0.0078125 / 0.08), places=12)

    def test_reconstruct_zero_image(self):
        output = self.call('reconstruct2d', '--target', 'zero', '--n', '16', '--a-range', '3', '--b-range', '3',
                           '--out-dir', self.path('run'))
        self.assertIn('Estimated cost', output)
        metrics = read_metrics(self.path('run', 'metrics.json'))
        self.assertEqual(metrics['relative_l2'], 0.0)
        self.assertEqual(metrics['max_abs_err'], 0.0)
        self.assertIsNone(metrics['high_band_ratio'])
        self.assertTrue(os.path.exists(self.path('run', 'reconstruction.pgm')))

    def test_cost_gate(self):
        error = self.assertExitCode(EXIT_USAGE, 'reconstruct2d', '--n', '256', '--a-range', '300',
                                    '--out-dir', self.path('run'))
        self.assertIn('--full', str(error))

    def test_sine_is_not_an_image(self):
        self.assertExitCode(EXIT_USAGE, 'reconstruct2d', '--target', 'sine', '--n', '16', '--a-range', '2',
                            '--b-range', '2', '--out-dir', self.path('run'))

    def test_radoncheck_zero_image(self):
        output = self.call('radoncheck', '--target', 'zero', '--n', '16', '--a-range', '2', '--b-range', '2',
                           '--out-dir', self.path('run'))
        self.assertIn('deviation=0.000000', output)
        for name in ('fbp.pgm', 'ridgelet.pgm', 'metrics.json'):
            self.assertTrue(os.path.exists(self.path('run', name)), name)

    def test_transform(self):
        self.call('transform', '--method', 'fourier-slice', '--a-range', '4', '--a-step', '0.5', '--b-range', '2',
                  '--b-step', '0.5', '--out-dir', self.path('run'))
        frame = pd.read_csv(self.path('run', 'coefficients.csv'))
        self.assertEqual(len(frame), 17 * 9)
        self.assertExitCode(EXIT_USAGE, 'transform', '--method', 'fourier-slice', '--m', '2', '--target', 'zero',
                            '--out-dir', self.path('run'))


class TestEnvironmentDefaults(CommandTestCase):
    def test_output_dir_and_workers_fall_back_to_the_configuration(self):
        with mock.patch('experiments.experiment_config.OUTPUT_DIR', self.path('default')), \
                mock.patch('experiments.experiment_config.WORKERS', 3), \
                mock.patch('experiments.management.commands.transform.forward') as forward:
            forward.side_effect = lambda target, psi, grids, workers=None: \
                ridgelet_transforms.forward(target, psi, grids, workers=workers)
            self.call('transform', '--a-range', '2', '--b-range', '2', '--a-step', '1', '--b-step', '1')
        self.assertEqual(forward.call_args[1]['workers'], 3)
        self.assertTrue(os.path.exists(self.path('default', 'coefficients.csv')))
