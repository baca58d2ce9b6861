# s in the weights ||a||^s (forward) and ||a||^-s (dual)
WEIGHT_EXPONENT = 1

# cells with ||a|| below this fraction of the a-step are dropped from dual sums (1 / ||a|| blows up at a = 0)
A_MIN_FRACTION = 0.5

# Fourier-slice path: the beta-period must cover |b| / |a| for |a| >= FOURIER_SLICE_MIN_A plus a margin
FOURIER_SLICE_MIN_A = 1.0
FOURIER_SLICE_BETA_MARGIN = 10.0
# frequency-domain zero padding, refines the beta lattice before interpolating to b = beta |a|
FOURIER_SLICE_REFINEMENT = 4

NETWORK_FORMAT_VERSION = 'ridgenet-v1'

# tolerated imaginary residue of a reconstruction, relative to the norm of the real part
IMAGINARY_RESIDUE_TOLERANCE = 1e-6

# evaluation points per work item are chosen so that points x units stays below this many elements
EVALUATION_ELEMENT_BUDGET = 1 << 22
