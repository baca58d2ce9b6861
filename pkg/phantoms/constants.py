import math

# Shepp and Logan, "The Fourier reconstruction of a head section", IEEE Trans. Nucl. Sci. 21 (1974).
# Original gray values; rows are (intensity, semi-axis x, semi-axis y, center x, center y, rotation in degrees).
SHEPP_LOGAN_ELLIPSES = (
    (2.00, .69, .92, 0., 0., 0.),
    (-.98, .6624, .8740, 0., -.0184, 0.),
    (-.02, .11, .31, .22, 0., -18.),
    (-.02, .16, .41, -.22, 0., 18.),
    (.01, .21, .25, 0., .35, 0.),
    (.01, .046, .046, 0., .1, 0.),
    (.01, .046, .046, 0., -.1, 0.),
    (.01, .046, .023, -.08, -.605, 0.),
    (.01, .023, .023, 0., -.605, 0.),
    (.01, .023, .046, .06, -.605, 0.),
)

SHEPP_LOGAN_MIN_SIZE = 16

# subsamples per image side, split evenly over the pixels, so that a 4n image block-averaged by 4 equals the n image
SUPERSAMPLE_RESOLUTION = 1024

DISPLAY_RANGE = (0.0, 1.0)

SIGNAL_FREQUENCY = 2.0 * math.pi
SIGNAL_HALF_WIDTH = 1.0
SIGNAL_STEP = 0.01

BLOB_CENTER = (0.0, 0.0)
BLOB_WIDTH = 0.2

PHANTOM_SHEPP_LOGAN = 'shepp-logan'
PHANTOM_BLOB = 'blob'
PHANTOM_ZERO = 'zero'
PHANTOM_KINDS = (PHANTOM_SHEPP_LOGAN, PHANTOM_BLOB, PHANTOM_ZERO)
