import pandas as pd
from django.core.management.base import BaseCommand, CommandError

from activations.exceptions import UnknownActivationException, ActivationNotImplementedException
from admissibility.exceptions import (IndeterminateAdmissibilityException, ConstructionFailedException,
                                      NonAdmissiblePairException)
from core_grids.exceptions import InvalidArgumentException
from experiments.constants import EXIT_USAGE, EXIT_IO, EXIT_NON_ADMISSIBLE
from experiments.experiment_config import GridFlags, GRID_DEFAULTS_1D, GRID_DEFAULTS_2D
from ridgelet.exceptions import NetworkFormatException
from ridgenet.config import cli_logger


class ExperimentCommand(BaseCommand):
    """
    Management command translating domain errors into exit codes: 2 usage, 3 I/O, 4 non-admissible

    Subclasses implement run(**options) instead of handle().
    """
    def add_grid_arguments(self, parser):
        parser.add_argument('--a-range', type=float, default=None,
                            help='every a-component lies in [-A, A]. Default %s (signals), %s (images)'
                            % (GRID_DEFAULTS_1D.a_range, GRID_DEFAULTS_2D.a_range))
        parser.add_argument('--a-step', type=float, default=None,
                            help='a-lattice spacing. Default %s (signals), %s (images)'
                            % (GRID_DEFAULTS_1D.a_step, GRID_DEFAULTS_2D.a_step))
        parser.add_argument('--b-range', type=float, default=None,
                            help='half-width of the b-interval. Default %s' % GRID_DEFAULTS_1D.b_range)
        parser.add_argument('--b-step', type=float, default=None,
                            help='b-lattice spacing. Default %s (signals), %s (images)'
                            % (GRID_DEFAULTS_1D.b_step, GRID_DEFAULTS_2D.b_step))
        parser.add_argument('--x-step', type=float, default=None,
                            help='sample spacing of signals. Default %s' % GRID_DEFAULTS_1D.x_step)
        parser.add_argument('--n', type=int, default=None,
                            help='pixels per side of images. Default %s' % GRID_DEFAULTS_2D.n)

    def add_common_arguments(self, parser):
        parser.add_argument('--out-dir', default=None,
                            help='output directory, defaults to RIDGENET_OUTPUT_DIR')
        parser.add_argument('--workers', type=int, default=None,
                            help='thread pool size, defaults to RIDGENET_WORKERS (logical cores)')

    @staticmethod
    def grid_flags(options, m, defaults=None):
        """Grid flags given on the command line, the dimension's defaults for the others."""
        defaults = defaults or (GRID_DEFAULTS_1D if m == 1 else GRID_DEFAULTS_2D)
        return GridFlags(*[defaults[index] if options.get(field) is None else options[field]
                           for index, field in enumerate(GridFlags._fields)])

    def run(self, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except (InvalidArgumentException, UnknownActivationException, ActivationNotImplementedException) as e:
            cli_logger.error('%s: %s' % (self.__class__.__module__, e))
            raise CommandError(str(e), returncode=EXIT_USAGE)
        except (ConstructionFailedException, NonAdmissiblePairException, IndeterminateAdmissibilityException) as e:
            trace = getattr(e, 'reports', None) or getattr(e, 'trace', None)
            cli_logger.error('%s: %s, trace %r' % (self.__class__.__module__, e, trace))
            raise CommandError('%s\n%s' % (e, format_trace(trace)), returncode=EXIT_NON_ADMISSIBLE)
        except (IOError, OSError, NetworkFormatException, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            cli_logger.error('%s: %s' % (self.__class__.__module__, e))
            raise CommandError(str(e), returncode=EXIT_IO)


def format_trace(trace):
    """Readable admissibility trace: per-order reports or (cutoff, partial K) pairs."""
    if not trace:
        return ''
    lines = []
    for first, second in trace:
        if hasattr(second, 'classification'):
            lines.append('  order %d: %s, K = %r' % (first, second.classification, second.K))
        elif second is None:
            lines.append('  order %d: indeterminate' % first)
        else:
            lines.append('  eps = %.0e: K = %r' % (first, second))
    return '\n'.join(lines)
