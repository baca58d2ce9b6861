# slack, in units of step, admitted when deciding whether the last lattice point lies inside [start, stop]
GRID_STOP_SLACK = 1e-9

# absolute tolerance used to compare grid metadata
GRID_COMPARE_ATOL = 1e-12

# number of significant digits for floats written to CSV/JSON
FLOAT_SIGNIFICANT_DIGITS = 17
FLOAT_FORMAT = '%.17g'

PGM_MAX_VALUE = 255
