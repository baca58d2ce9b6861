import time

from core_grids.io import save_signal_csv, save_image_csv
from experiments.command_base import ExperimentCommand
from experiments.constants import TARGET_SINE, ETA_SYNTH, NETWORK_FILE, EVAL_FILE, METRICS_FILE
from experiments.experiment_config import make_config, load_target, ensure_output_dir
from experiments.metrics import write_metrics
from experiments.runs import synthesize, synthesis_metrics, sample_points, SynthesisRun
from ridgelet.network import save_network, load_network, evaluate_network
from ridgenet.config import cli_logger


class Command(ExperimentCommand):
    help = 'Synthesize a one-hidden-layer network for a target without training, or re-evaluate a saved one'

    def add_arguments(self, parser):
        parser.add_argument('--target', default=TARGET_SINE,
                            help='sine, a phantom kind or a CSV file. Default %s' % TARGET_SINE)
        parser.add_argument('--m', type=int, choices=[1, 2], default=1, help='input dimension. Default 1')
        parser.add_argument('--eta', default=ETA_SYNTH, help='activation name. Default %s' % ETA_SYNTH)
        parser.add_argument('--psi', default=None,
                            help='ridgelet lg, lg1, lg2; constructed from the activation when omitted')
        parser.add_argument('--network', default=None,
                            help='evaluate this %s file instead of synthesizing a new network' % NETWORK_FILE)
        self.add_grid_arguments(parser)
        self.add_common_arguments(parser)

    def run(self, **options):
        m = options['m']
        config = make_config(options['target'], options['psi'], options['eta'], m, self.grid_flags(options, m),
                             output_dir=options['out_dir'], workers=options['workers'])
        target = load_target(config)
        if options['network']:
            started = time.time()
            network = load_network(options['network'])
            evaluation = evaluate_network(network, sample_points(target), workers=config.workers)
            result = SynthesisRun(target, network, evaluation, time.time() - started)
        else:
            result = synthesize(target, config.eta, config.grids, psi=config.psi, workers=config.workers)
        metrics = synthesis_metrics(result)
        ensure_output_dir(config)
        if not options['network']:
            save_network(result.network, config.output_path(NETWORK_FILE))
        if m == 1:
            save_signal_csv(result.evaluation, config.output_path(EVAL_FILE))
        else:
            save_image_csv(result.evaluation, config.output_path(EVAL_FILE))
        write_metrics(metrics, config.output_path(METRICS_FILE))
        cli_logger.info('synth %s: %d units, relative L2 %.4f'
                        % (result.network.eta.name, metrics['units'], metrics['relative_l2']))
        self.stdout.write('units=%d relative_l2=%.6f' % (metrics['units'], metrics['relative_l2']))
