import os

from core_grids.io import save_pgm, save_image_csv
from experiments.command_base import ExperimentCommand
from experiments.constants import PHANTOM_FILE
from phantoms.constants import PHANTOM_KINDS, PHANTOM_SHEPP_LOGAN
from phantoms.phantoms import make_phantom, display_values
from ridgenet.config import OUTPUT_DIR, cli_logger


class Command(ExperimentCommand):
    help = 'Write a test image as PGM (clamped to [0, 1]) or as CSV (raw values), chosen by the file extension'

    def add_arguments(self, parser):
        parser.add_argument('--kind', choices=PHANTOM_KINDS, default=PHANTOM_SHEPP_LOGAN,
                            help='image to generate. Default %s' % PHANTOM_SHEPP_LOGAN)
        parser.add_argument('--n', type=int, default=256, help='pixels per side. Default 256')
        parser.add_argument('--out', default=None,
                            help='output file (.pgm or .csv). Default <RIDGENET_OUTPUT_DIR>/%s' % PHANTOM_FILE)
        parser.add_argument('--workers', type=int, default=None,
                            help='thread pool size, defaults to RIDGENET_WORKERS (logical cores)')

    def run(self, **options):
        path = options['out'] or os.path.join(OUTPUT_DIR, PHANTOM_FILE)
        image = make_phantom(options['kind'], options['n'], workers=options['workers'])
        directory = os.path.dirname(path)
        if directory and not os.path.isdir(directory):
            os.makedirs(directory)
        if path.lower().endswith('.csv'):
            save_image_csv(image, path)
        else:
            save_pgm(display_values(image), path)
        cli_logger.info('Wrote %s phantom %dx%d to %s' % (options['kind'], options['n'], options['n'], path))
        self.stdout.write('Wrote %s' % path)
