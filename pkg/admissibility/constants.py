import collections

ADMISSIBLE = 'admissible'
VANISHING = 'vanishing'
DIVERGENT = 'divergent'

CLASSIFICATION_SYMBOLS = {
    ADMISSIBLE: '+',
    VANISHING: '0',
    DIVERGENT: u'∞',
}

QuadratureParams = collections.namedtuple('QuadratureParams', [
    'outer_radius',     # R, the Gaussian factor of psi_hat makes the tail beyond it negligible
    'decades',          # inner cutoffs eps_n = 10^-n, n = 1..decades
    'epsabs',
    'epsrel',
    'nodes',            # Gauss-Legendre nodes per subinterval
    'max_depth',        # bisection depth limit of the adaptive rule
    'tol_zero',         # |K| below tol_zero * integral of |integrand| means K = 0
    'tol_conv',         # last annulus below tol_conv * integral of |integrand| means converged
    'growth_floor',     # an annulus carrying at least this fraction of the previous one is not decaying
    'divergence_run',   # that many non-decaying annuli in a row mean divergence
])

DEFAULT_QUADRATURE = QuadratureParams(outer_radius=50.0, decades=12, epsabs=1e-14, epsrel=1e-10, nodes=32,
                                      max_depth=30, tol_zero=1e-8, tol_conv=1e-6, growth_floor=0.5, divergence_run=3)

# breakpoints inside [0.1, R] where the Gaussian factor changes scale
OUTER_BREAKPOINTS = (1.0, 3.0, 6.0, 10.0)

DEFAULT_MAX_ORDER = 8

# Table rows: (label, CLI activation name)
DIAGNOSIS_ROWS = (
    (u'σ′', 'dsigmoid:1'),
    (u'σ', 'sigmoid'),
    ('softplus', 'softplus'),
    (u'δ', 'delta'),
    ('step', 'step'),
    ('ReLU', 'relu'),
    ('linear', 'linear'),
    ('RBF', 'rbf'),
)

# Table columns: base orders l of psi = Lambda^m G^(l)
DIAGNOSIS_ORDERS = (0, 1, 2)
