import pandas as pd

from admissibility.admissibility import diagnose_table, diagnose_parity
from admissibility.constants import CLASSIFICATION_SYMBOLS
from core_grids.constants import FLOAT_FORMAT
from core_grids.exceptions import InvalidArgumentException
from experiments.command_base import ExperimentCommand
from experiments.constants import PARITY_FAMILIES, PARITY_ORDERS
from ridgenet.config import cli_logger

PRIMES = {0: u'', 1: u'′', 2: u'″'}
SUPERSCRIPTS = {1: u'', 2: u'²'}


def ridgelet_label(psi):
    return u'Λ%sG%s' % (SUPERSCRIPTS.get(psi.m, '^%d' % psi.m), PRIMES.get(psi.base_order, '^(%d)' % psi.base_order))


def table_frame(table):
    rows = []
    for row in table:
        for cell in row:
            rows.append({'activation': cell.label, 'psi': cell.psi.name,
                         'classification': cell.report.classification,
                         'symbol': CLASSIFICATION_SYMBOLS[cell.report.classification],
                         'K_re': cell.report.K.real, 'K_im': cell.report.K.imag})
    return pd.DataFrame(rows, columns=['activation', 'psi', 'classification', 'symbol', 'K_re', 'K_im'])


def parse_orders(text):
    try:
        orders = [int(token) for token in text.split(',') if token.strip()]
    except ValueError:
        raise InvalidArgumentException('--orders must be a comma separated list of integers, got %r' % text)
    if not orders or min(orders) < 1:
        raise InvalidArgumentException('--orders must list derivative orders >= 1, got %r' % text)
    return orders


class Command(ExperimentCommand):
    help = 'Admissibility diagnosis of the activation zoo against Lambda^m G, Lambda^m G\', Lambda^m G\'\''

    def add_arguments(self, parser):
        parser.add_argument('--m', type=int, choices=[1, 2], default=1, help='input dimension. Default 1')
        parser.add_argument('--csv', default=None, help='also write the table to this CSV file')
        parser.add_argument('--parity', choices=PARITY_FAMILIES, default=None,
                            help='scan Lambda^m G against the derivatives of a Gaussian or of the sigmoid instead')
        parser.add_argument('--orders', default=PARITY_ORDERS,
                            help='derivative orders of the parity scan. Default %s' % PARITY_ORDERS)
        parser.add_argument('--workers', type=int, default=None,
                            help='thread pool size, defaults to RIDGENET_WORKERS (logical cores)')

    def run(self, **options):
        m = options['m']
        if options['parity']:
            self.write_parity(options['parity'], m, parse_orders(options['orders']))
            return
        table = diagnose_table(m, workers=options['workers'])
        self.write_table(table)
        if options['csv']:
            table_frame(table).to_csv(options['csv'], index=False, float_format=FLOAT_FORMAT)
            cli_logger.info('Wrote admissibility table for m=%d to %s' % (m, options['csv']))

    def write_table(self, table):
        header = [u'%-10s' % u'η \\ ψ'] + [u'%-6s' % ridgelet_label(cell.psi) for cell in table[0]]
        self.stdout.write(u' '.join(header).rstrip())
        for row in table:
            symbols = [u'%-6s' % CLASSIFICATION_SYMBOLS[cell.report.classification] for cell in row]
            self.stdout.write(u' '.join([u'%-10s' % row[0].label] + symbols).rstrip())

    def write_parity(self, family, m, orders):
        for order, report in diagnose_parity(family, m, orders):
            self.stdout.write(u'%s k=%d %s K=%s' % (family, order, CLASSIFICATION_SYMBOLS[report.classification],
                                                    FLOAT_FORMAT % abs(report.K)))

