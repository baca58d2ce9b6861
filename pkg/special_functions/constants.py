import math

SQRT_2 = math.sqrt(2.0)
SQRT_PI = math.sqrt(math.pi)
SQRT_2PI = math.sqrt(2.0 * math.pi)

# Dawson oracle: quadrature of the defining integral up to this |z|, asymptotic series beyond
DAWSON_QUADRATURE_LIMIT = 6.0
DAWSON_ASYMPTOTIC_TERMS = 12
DAWSON_QUADRATURE_EPSABS = 1e-12
DAWSON_QUADRATURE_EPSREL = 1e-12
