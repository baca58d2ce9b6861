from core_grids.io import save_signal_csv
from experiments.command_base import ExperimentCommand
from experiments.constants import (TARGET_SINE, PSI_1D, ETA_1D, COEFFICIENTS_FILE, RECONSTRUCTION_CSV_FILE,
                                   METRICS_FILE)
from experiments.experiment_config import make_config, load_target, ensure_output_dir
from experiments.metrics import write_metrics
from experiments.runs import reconstruct, reconstruction_metrics
from ridgelet.transforms import save_coefficients
from ridgenet.config import cli_logger


class Command(ExperimentCommand):
    help = 'Reconstruct a signal as R_eta^dagger R_psi f / K; non-admissible pairs run too and record their class'

    def add_arguments(self, parser):
        parser.add_argument('--target', default=TARGET_SINE,
                            help='sine or a CSV file with the columns x,value. Default %s' % TARGET_SINE)
        parser.add_argument('--psi', default=PSI_1D, help='ridgelet lg, lg1, lg2. Default %s' % PSI_1D)
        parser.add_argument('--eta', default=ETA_1D, help='activation name. Default %s' % ETA_1D)
        self.add_grid_arguments(parser)
        self.add_common_arguments(parser)

    def run(self, **options):
        config = make_config(options['target'], options['psi'], options['eta'], 1, self.grid_flags(options, 1),
                             output_dir=options['out_dir'], workers=options['workers'])
        target = load_target(config)
        result = reconstruct(target, config.psi, config.eta, config.grids, workers=config.workers)
        metrics = reconstruction_metrics(result)
        metrics['psi'] = config.psi.name
        metrics['eta'] = config.eta.name
        ensure_output_dir(config)
        save_coefficients(result.coefficients, config.output_path(COEFFICIENTS_FILE))
        save_signal_csv(result.reconstruction, config.output_path(RECONSTRUCTION_CSV_FILE))
        write_metrics(metrics, config.output_path(METRICS_FILE))
        cli_logger.info('reconstruct1d (%s, %s): relative L2 %.4f, %s'
                        % (config.psi.name, config.eta.name, metrics['relative_l2'], metrics['classification']))
        self.stdout.write('relative_l2=%.6f classification=%s' % (metrics['relative_l2'], metrics['classification']))
