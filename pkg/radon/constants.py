import math

DEFAULT_ANGLE_COUNT = 180

# samples along each line per pixel pitch
LINE_SAMPLES_PER_PIXEL = 2

# zero padding of the per-angle filter, suppresses circular wrap
FILTER_OVERSAMPLE = 4

FULL_TURN = 2.0 * math.pi

# order of the image-domain dimension in R* Lambda^(m-1) R = 2 (2 pi)^(m-1) I
RADON_DIMENSION = 2
