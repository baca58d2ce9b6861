from core_grids.exceptions import InvalidArgumentException
from experiments.command_base import ExperimentCommand
from experiments.constants import TARGET_SINE, PSI_1D, ETA_1D, METHOD_DIRECT, METHOD_FOURIER_SLICE, COEFFICIENTS_FILE
from experiments.experiment_config import make_config, load_target, ensure_output_dir
from ridgelet.transforms import forward, forward_fourier_slice, save_coefficients
from ridgenet.config import cli_logger


class Command(ExperimentCommand):
    help = 'Forward ridgelet transform of a target, written as coefficients.csv (a..., b, re, im)'

    def add_arguments(self, parser):
        parser.add_argument('--target', default=TARGET_SINE,
                            help='sine, a phantom kind or a CSV file (x,value or x,y,value). Default %s' % TARGET_SINE)
        parser.add_argument('--m', type=int, choices=[1, 2], default=1, help='input dimension. Default 1')
        parser.add_argument('--psi', default=PSI_1D, help='ridgelet lg, lg1, lg2. Default %s' % PSI_1D)
        parser.add_argument('--method', choices=[METHOD_DIRECT, METHOD_FOURIER_SLICE], default=METHOD_DIRECT,
                            help='direct sum or Fourier slice (signals only). Default %s' % METHOD_DIRECT)
        self.add_grid_arguments(parser)
        self.add_common_arguments(parser)

    def run(self, **options):
        m = options['m']
        config = make_config(options['target'], options['psi'], ETA_1D, m, self.grid_flags(options, m),
                             output_dir=options['out_dir'], workers=options['workers'])
        if options['method'] == METHOD_FOURIER_SLICE and config.m != 1:
            raise InvalidArgumentException('The Fourier slice method transforms signals only (m = 1)')
        target = load_target(config)
        if options['method'] == METHOD_FOURIER_SLICE:
            coefficients = forward_fourier_slice(target, config.psi, config.grids, workers=config.workers)
        else:
            coefficients = forward(target, config.psi, config.grids, workers=config.workers)
        ensure_output_dir(config)
        path = config.output_path(COEFFICIENTS_FILE)
        save_coefficients(coefficients, path)
        cli_logger.info('Wrote %d coefficients to %s' % (config.grids.size, path))
        self.stdout.write('Wrote %s' % path)
