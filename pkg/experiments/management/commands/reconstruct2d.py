from core_grids.exceptions import InvalidArgumentException
from core_grids.io import save_pgm
from experiments.command_base import ExperimentCommand
from experiments.constants import (TARGET_2D, PSI_2D, ETA_2D, DESK_COST_LIMIT, RECONSTRUCTION_PGM_FILE,
                                   METRICS_FILE)
from experiments.experiment_config import make_config, load_target, ensure_output_dir, GRID_DEFAULTS_FULL
from experiments.metrics import write_metrics
from experiments.runs import reconstruct, reconstruction_metrics, estimated_cost
from ridgenet.config import cli_logger


class Command(ExperimentCommand):
    help = 'Reconstruct an image as R_eta^dagger R_psi f / K at desk scale (n=64, a in [-75, 75]^2) ' \
           'or, with --full, at n=256 with a in [-300, 300]^2'

    def add_arguments(self, parser):
        parser.add_argument('--target', default=TARGET_2D,
                            help='shepp-logan, blob, zero or a CSV file with the columns x,y,value. '
                                 'Default %s' % TARGET_2D)
        parser.add_argument('--psi', default=PSI_2D, help='ridgelet lg, lg1, lg2. Default %s' % PSI_2D)
        parser.add_argument('--eta', default=ETA_2D, help='activation name. Default %s' % ETA_2D)
        parser.add_argument('--full', action='store_true', default=False,
                            help='full-scale grids; a cost estimate is printed before the run')
        self.add_grid_arguments(parser)
        self.add_common_arguments(parser)

    def run(self, **options):
        defaults = GRID_DEFAULTS_FULL if options['full'] else None
        config = make_config(options['target'], options['psi'], options['eta'], 2,
                             self.grid_flags(options, 2, defaults=defaults),
                             output_dir=options['out_dir'], workers=options['workers'])
        cost = estimated_cost(config.grids, config.samples)
        self.stdout.write('Estimated cost: %d units x %d pixels = %.3g unit-pixel products per transform'
                          % (config.grids.size, config.samples[0].count * config.samples[1].count, cost))
        if cost > DESK_COST_LIMIT and not options['full']:
            raise InvalidArgumentException('Estimated cost %.3g exceeds the desk limit %.3g, pass --full to run it'
                                           % (cost, DESK_COST_LIMIT))
        target = load_target(config)
        result = reconstruct(target, config.psi, config.eta, config.grids, workers=config.workers)
        metrics = reconstruction_metrics(result)
        metrics['psi'] = config.psi.name
        metrics['eta'] = config.eta.name
        ensure_output_dir(config)
        save_pgm(result.reconstruction.values, config.output_path(RECONSTRUCTION_PGM_FILE))
        write_metrics(metrics, config.output_path(METRICS_FILE))
        cli_logger.info('reconstruct2d (%s, %s): interior relative L2 %.4f, %s'
                        % (config.psi.name, config.eta.name, metrics['relative_l2'], metrics['classification']))
        self.stdout.write('relative_l2=%.6f classification=%s' % (metrics['relative_l2'], metrics['classification']))
