import logging.handlers
import multiprocessing
import os

import dotenv

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CONFIG_PATH = os.environ.get('RIDGENET_CONFIG_PATH', os.path.join(BASE_DIR, 'config'))

LOG_PATH = os.path.join(BASE_DIR, 'logs')

if not os.path.exists(LOG_PATH):
    os.makedirs(LOG_PATH)

if os.path.exists(CONFIG_PATH):
    dotenv.read_dotenv(CONFIG_PATH)

LOG_LEVEL = os.environ.get('RIDGENET_LOG_LEVEL', 'error').upper()

# Common formatter
formatter = logging.Formatter("%(asctime)s\t%(levelname)s\t%(message)s", "%Y-%m-%d %H:%M:%S")

# Handler for stdout
handler_stdout = logging.StreamHandler()
handler_stdout.setLevel(LOG_LEVEL)
handler_stdout.setFormatter(formatter)

# SETUP LIBRARY LOGGING
RIDGENET_LOG_FILENAME = os.path.join(LOG_PATH, 'ridgenet_log.log')
ridgenet_logger = logging.getLogger('RidgeNetLogger')
ridgenet_logger.setLevel(LOG_LEVEL)
handler = logging.handlers.WatchedFileHandler(RIDGENET_LOG_FILENAME)
handler.setFormatter(formatter)
ridgenet_logger.addHandler(handler)
ridgenet_logger.addHandler(handler_stdout)

# SETUP CLI LOGGING
CLI_LOG_FILENAME = os.path.join(LOG_PATH, 'cli_log.log')
cli_logger = logging.getLogger('RidgeNetCLILogger')
cli_logger.setLevel(LOG_LEVEL)
handler = logging.handlers.WatchedFileHandler(CLI_LOG_FILENAME)
handler.setFormatter(formatter)
cli_logger.addHandler(handler)
cli_logger.addHandler(handler_stdout)

if not os.path.exists(CONFIG_PATH):
    ridgenet_logger.warning('No config file found at %s, using environment variables and defaults only',
                            CONFIG_PATH)

DEFAULT_WORKERS = multiprocessing.cpu_count() or 1
WORKERS = os.environ.get('RIDGENET_WORKERS', str(DEFAULT_WORKERS))
CHUNK_SIZE = os.environ.get('RIDGENET_CHUNK_SIZE', '8')

try:
    WORKERS = max(int(WORKERS), 1)
except ValueError:
    ridgenet_logger.warning('RIDGENET_WORKERS=%r is not an integer, using %d', WORKERS, DEFAULT_WORKERS)
    WORKERS = DEFAULT_WORKERS

try:
    CHUNK_SIZE = max(int(CHUNK_SIZE), 1)
except ValueError:
    ridgenet_logger.warning('RIDGENET_CHUNK_SIZE=%r is not an integer, using 8', CHUNK_SIZE)
    CHUNK_SIZE = 8

OUTPUT_DIR = os.environ.get('RIDGENET_OUTPUT_DIR', os.path.join(BASE_DIR, 'output'))
