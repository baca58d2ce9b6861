import math

METRICS_SCHEMA = 1

# process exit codes of the management commands
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NON_ADMISSIBLE = 4

TARGET_SINE = 'sine'

# one-dimensional experiment: sin 2 pi x on [-1, 1], (a, b) in [-30, 30]^2
X_HALF_WIDTH = 1.0
X_STEP = 0.01
A_RANGE_1D = 30.0
A_STEP_1D = 0.1
B_RANGE_1D = 30.0
B_STEP_1D = 0.1
PSI_1D = 'lg'
ETA_1D = 'dsigmoid:1'

# two-dimensional desk scale, the a-box scaled down with the image side (256 -> 64, 300 -> 75)
N_2D = 64
A_RANGE_2D = 75.0
A_STEP_2D = 1.0
B_RANGE_2D = 30.0
B_STEP_2D = 1.0
PSI_2D = 'lg2'
ETA_2D = 'relu'
TARGET_2D = 'shepp-logan'

# two-dimensional full scale, only with --full
N_FULL = 256
A_RANGE_FULL = 300.0

# unit x pixel products accepted without --full
DESK_COST_LIMIT = 2e10

PSI_RADON = 'lg'
ETA_RADON = 'rbf'
TARGET_RADON = 'shepp-logan'

ETA_SYNTH = 'relu'

PARITY_FAMILIES = ('gaussian', 'sigmoid')
PARITY_ORDERS = '1,2,3,4'

METHOD_DIRECT = 'direct'
METHOD_FOURIER_SLICE = 'fourier-slice'

# spectral bands of the low-pass diagnosis, angular frequency
LOW_BAND = 2.0 * math.pi
HIGH_BAND = 4.0 * math.pi
# zero padding of band spectra after the Hann taper: the samples are treated as compactly supported, not periodic
BAND_OVERSAMPLE = 4

# fraction of the image side excluded on every border by image error metrics
INTERIOR_BORDER = 0.1

COEFFICIENTS_FILE = 'coefficients.csv'
RECONSTRUCTION_CSV_FILE = 'reconstruction.csv'
RECONSTRUCTION_PGM_FILE = 'reconstruction.pgm'
METRICS_FILE = 'metrics.json'
NETWORK_FILE = 'network.ridgenet'
EVAL_FILE = 'eval.csv'
FBP_FILE = 'fbp.pgm'
RIDGELET_FILE = 'ridgelet.pgm'
PHANTOM_FILE = 'phantom.pgm'
