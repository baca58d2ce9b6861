import numpy as np
from django.test import TestCase

from core_grids.exceptions import InvalidArgumentException
from special_functions.dawson import dawson, dawson_quadrature, dawson_derivatives, hilbert_gaussian
from special_functions.gaussian import gaussian, gaussian_derivative, hermite_e, i_power, imaginary_power


class TestGaussian(TestCase):
    def test_hermite_polynomials(self):
        z = np.array([-1.5, 0.0, 0.5, 2.0])
        np.testing.assert_allclose(hermite_e(2, z), z ** 2 - 1)
        np.testing.assert_allclose(hermite_e(3, z), z ** 3 - 3 * z)
        np.testing.assert_allclose(hermite_e(4, z), z ** 4 - 6 * z ** 2 + 3)

    def test_point_values(self):
        self.assertEqual(gaussian(0.0), 1.0)
        self.assertAlmostEqual(gaussian_derivative(1, 1.0), -np.exp(-0.5), places=15)
        self.assertAlmostEqual(gaussian_derivative(2, 0.0), -1.0, places=15)

    def test_derivatives_against_finite_differences(self):
        z = np.linspace(-6, 6, 241)
        h = 1e-4
        for order in range(0, 6):
            difference = (gaussian_derivative(order, z + h) - gaussian_derivative(order, z - h)) / (2 * h)
            exact = gaussian_derivative(order + 1, z)
            self.assertLessEqual(np.max(np.abs(difference - exact)) / np.max(np.abs(exact)), 1e-5,
                                 'order %d' % (order + 1))

    def test_negative_order(self):
        with self.assertRaises(InvalidArgumentException):
            gaussian_derivative(-1, 0.0)

    def test_imaginary_powers(self):
        self.assertEqual([i_power(k) for k in range(5)], [1, 1j, -1, -1j, 1])
        zeta = np.array([-2.0, 3.0])
        np.testing.assert_array_equal(imaginary_power(zeta, 3), -1j * zeta ** 3)


class TestDawson(TestCase):
    def test_zero_and_symmetry(self):
        self.assertEqual(dawson(0.0), 0.0)
        z = np.linspace(0.1, 8, 40)
        np.testing.assert_allclose(dawson(-z), -dawson(z), rtol=0, atol=1e-15)

    def test_against_quadrature_oracle(self):
        for z in (0.25, 0.5, 0.9241388730, 1.5, 3.0, 5.5, 6.5, 10.0):
            self.assertAlmostEqual(float(dawson(z)), dawson_quadrature(z), places=9, msg='z=%g' % z)

    def test_maximum(self):
        # F attains its maximum 0.5410442246 at z = 0.9241388730
        self.assertAlmostEqual(float(dawson(0.9241388730)), 0.5410442246, places=9)

    def test_ode_residual(self):
        z = np.linspace(-8, 8, 161)
        h = 1e-4
        derivative = (dawson(z + h) - dawson(z - h)) / (2 * h)
        self.assertLessEqual(np.max(np.abs(derivative - (1 - 2 * z * dawson(z)))), 1e-7)

    def test_derivative_recurrence(self):
        z = np.linspace(-4, 4, 81)
        h = 1e-4
        upper = dawson_derivatives(4, z + h)
        lower = dawson_derivatives(4, z - h)
        exact = dawson_derivatives(5, z)
        for order in range(1, 5):
            difference = (upper[order - 1] - lower[order - 1]) / (2 * h)
            self.assertLessEqual(np.max(np.abs(difference - exact[order])), 1e-6, 'order %d' % order)

    def test_hilbert_gaussian_is_imaginary_and_odd(self):
        z = np.linspace(0.2, 5, 25)
        values = hilbert_gaussian(0, z)
        np.testing.assert_array_equal(values.real, 0)
        np.testing.assert_allclose(hilbert_gaussian(0, -z), -values, atol=1e-15)
        np.testing.assert_allclose(values.imag, 2 / np.sqrt(np.pi) * dawson(z / np.sqrt(2)))

    def test_hilbert_gaussian_derivative(self):
        z = np.linspace(-5, 5, 101)
        h = 1e-4
        for order in range(0, 4):
            difference = (hilbert_gaussian(order, z + h) - hilbert_gaussian(order, z - h)) / (2 * h)
            np.testing.assert_allclose(difference, hilbert_gaussian(order + 1, z), atol=1e-6)
