TRUNCATED_POWER = 'tpow'
RELU = 'relu'
STEP = 'step'
SIGMOID = 'sigmoid'
SIGMOID_DERIVATIVE = 'dsigmoid'
SOFTPLUS = 'softplus'
TANH = 'tanh'
TANH_DERIVATIVE = 'dtanh'
GAUSSIAN_RBF = 'rbf'
GAUSSIAN_DERIVATIVE = 'drbf'
DIRAC_DELTA = 'delta'
DIRAC_DERIVATIVE = 'ddelta'
LINEAR = 'linear'

# kinds whose CLI name carries an order, e.g. tpow:2
ORDERED_KINDS = (TRUNCATED_POWER, SIGMOID_DERIVATIVE, TANH_DERIVATIVE, GAUSSIAN_DERIVATIVE, DIRAC_DERIVATIVE)

# kinds that are smooth functions of z (finite-difference checks apply)
SMOOTH_KINDS = (SIGMOID, SIGMOID_DERIVATIVE, SOFTPLUS, TANH, TANH_DERIVATIVE, GAUSSIAN_RBF, GAUSSIAN_DERIVATIVE)

DEFAULT_DIRAC_WIDTH = 0.1

# above this |argument| sinh overflows double precision; the reciprocal is 0 to machine precision anyway
SINH_ARGUMENT_LIMIT = 700.0
