import numpy as np
from django.test import TestCase

from core_grids.exceptions import InvalidArgumentException, GridMismatchException
from core_grids.grids import (Grid1D, linspace, symmetric_grid, SampledSignal, SampledImage, ParamGrid,
                              RidgeletCoefficients, square_image_grids, relative_l2_error)


class TestGrid1D(TestCase):
    def test_linspace_counts(self):
        self.assertEqual(linspace(-1, 1, 0.01).count, 201)
        self.assertEqual(symmetric_grid(30, 0.1).count, 601)
        self.assertEqual(symmetric_grid(300, 1).count, 601)
        self.assertEqual(symmetric_grid(30, 1).count, 61)

    def test_linspace_keeps_endpoint_of_decimal_steps(self):
        grid = linspace(0, 1, 0.1)
        self.assertEqual(grid.count, 11)
        self.assertAlmostEqual(grid.stop, 1.0, places=12)

    def test_invalid_grids(self):
        with self.assertRaises(InvalidArgumentException):
            linspace(0, 1, 0)
        with self.assertRaises(InvalidArgumentException):
            linspace(1, 0, 0.1)
        with self.assertRaises(InvalidArgumentException):
            Grid1D(0, -0.5, 3)
        with self.assertRaises(InvalidArgumentException):
            Grid1D(0, 0.5, 0)

    def test_points_and_index(self):
        grid = Grid1D(-1, 0.25, 9)
        np.testing.assert_allclose(grid.points(), np.linspace(-1, 1, 9))
        self.assertEqual(grid.index_of(0.5), 6)
        self.assertEqual(grid.point(6), 0.5)

    def test_matches(self):
        self.assertTrue(Grid1D(0, 0.1, 5).matches(Grid1D(0.0, 0.1, 5)))
        self.assertFalse(Grid1D(0, 0.1, 5).matches(Grid1D(0, 0.1, 6)))


class TestSampledFields(TestCase):
    def test_signal_validation(self):
        grid = Grid1D(0, 1, 3)
        with self.assertRaises(InvalidArgumentException):
            SampledSignal(grid, [1.0, 2.0])
        with self.assertRaises(InvalidArgumentException):
            SampledSignal(grid, [1.0, np.nan, 2.0])

    def test_signal_is_read_only(self):
        signal = SampledSignal(Grid1D(0, 1, 3), [1.0, 2.0, 3.0])
        with self.assertRaises(ValueError):
            signal.values[0] = 5.0

    def test_sine_norm(self):
        grid = linspace(-1, 1, 0.01)
        signal = SampledSignal(grid, np.sin(2 * np.pi * grid.points()))
        self.assertAlmostEqual(signal.norm(), 1.0, places=9)

    def test_square_image_grids(self):
        grid_x, grid_y = square_image_grids(4)
        np.testing.assert_allclose(grid_x.points(), [-0.75, -0.25, 0.25, 0.75])
        self.assertEqual(grid_x, grid_y)

    def test_image_shape_and_interior(self):
        grid_x, grid_y = square_image_grids(64)
        image = SampledImage(grid_x, grid_y, np.arange(64 * 64, dtype=float))
        self.assertEqual(image.values.shape, (64, 64))
        interior = image.interior(0.1)
        self.assertEqual(interior.values.shape, (52, 52))
        self.assertEqual(interior.values[0, 0], image.values[6, 6])
        self.assertAlmostEqual(interior.grid_x.start, grid_x.point(6))
        with self.assertRaises(InvalidArgumentException):
            image.interior(0.5)

    def test_relative_l2_error(self):
        grid = Grid1D(0, 1, 4)
        reference = SampledSignal(grid, [1.0, 0.0, 0.0, 0.0])
        approx = SampledSignal(grid, [1.5, 0.0, 0.0, 0.0])
        self.assertAlmostEqual(relative_l2_error(approx, reference), 0.5)
        zero = SampledSignal(grid, np.zeros(4))
        self.assertEqual(relative_l2_error(zero, zero), 0.0)
        with self.assertRaises(GridMismatchException):
            relative_l2_error(approx, SampledSignal(Grid1D(0, 1, 5), np.zeros(5)))


class TestParamGrid(TestCase):
    def setUp(self):
        self.grid = ParamGrid([Grid1D(-1, 1, 3), Grid1D(0, 0.5, 2)], Grid1D(-2, 2, 3))

    def test_shape_and_measure(self):
        self.assertEqual(self.grid.m, 2)
        self.assertEqual(self.grid.shape, (3, 2, 3))
        self.assertEqual(self.grid.size, 18)
        self.assertEqual(self.grid.a_count, 6)
        self.assertAlmostEqual(self.grid.cell_measure, 1.0)
        self.assertEqual(self.grid.a_step, 0.5)
        self.assertEqual(self.grid.a_max, 1.0)

    def test_a_vectors_are_lexicographic(self):
        np.testing.assert_allclose(self.grid.a_vectors(),
                                   [[-1, 0], [-1, 0.5], [0, 0], [0, 0.5], [1, 0], [1, 0.5]])

    def test_coefficients_shape(self):
        coefficients = RidgeletCoefficients(self.grid, np.zeros(18))
        self.assertEqual(coefficients.values.shape, (6, 3))
        with self.assertRaises(InvalidArgumentException):
            RidgeletCoefficients(self.grid, np.zeros(17))

    def test_empty_a_axes(self):
        with self.assertRaises(InvalidArgumentException):
            ParamGrid([], Grid1D(0, 1, 2))
