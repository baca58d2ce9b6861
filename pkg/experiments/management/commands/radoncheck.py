from core_grids.io import save_pgm
from experiments.command_base import ExperimentCommand
from experiments.constants import TARGET_RADON, PSI_RADON, ETA_RADON, FBP_FILE, RIDGELET_FILE, METRICS_FILE
from experiments.experiment_config import make_config, load_target, ensure_output_dir
from experiments.metrics import write_metrics
from experiments.runs import compare_with_fbp, radon_metrics
from ridgenet.config import cli_logger


class Command(ExperimentCommand):
    help = 'Compare the ridgelet reconstruction of an image with its filtered backprojection'

    def add_arguments(self, parser):
        parser.add_argument('--target', default=TARGET_RADON,
                            help='shepp-logan, blob, zero or a CSV file with the columns x,y,value. '
                                 'Default %s' % TARGET_RADON)
        parser.add_argument('--psi', default=PSI_RADON, help='ridgelet lg, lg1, lg2. Default %s' % PSI_RADON)
        parser.add_argument('--eta', default=ETA_RADON, help='activation name. Default %s' % ETA_RADON)
        self.add_grid_arguments(parser)
        self.add_common_arguments(parser)

    def run(self, **options):
        config = make_config(options['target'], options['psi'], options['eta'], 2, self.grid_flags(options, 2),
                             output_dir=options['out_dir'], workers=options['workers'])
        target = load_target(config)
        result = compare_with_fbp(target, config.psi, config.eta, config.grids, workers=config.workers)
        metrics = radon_metrics(result)
        ensure_output_dir(config)
        save_pgm(result.comparison.fbp.values, config.output_path(FBP_FILE))
        save_pgm(result.comparison.ridgelet.values, config.output_path(RIDGELET_FILE))
        write_metrics(metrics, config.output_path(METRICS_FILE))
        cli_logger.info('radoncheck (%s, %s): deviation %.4f' % (config.psi.name, config.eta.name,
                                                                 metrics['deviation']))
        self.stdout.write('deviation=%.6f' % metrics['deviation'])
