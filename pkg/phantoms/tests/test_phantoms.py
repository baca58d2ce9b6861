import math

import numpy as np
from django.test import TestCase

from core_grids.exceptions import InvalidArgumentException
from core_grids.grids import linspace, square_image_grids
from phantoms.constants import SHEPP_LOGAN_ELLIPSES
from phantoms.phantoms import (Ellipse, sine_signal, shepp_logan, gaussian_blob, zero_image, display_values,
                               make_phantom)


def intensity_at(x, y):
    total = 0.0
    for intensity, axis_x, axis_y, center_x, center_y, degrees in SHEPP_LOGAN_ELLIPSES:
        angle = math.radians(degrees)
        dx, dy = x - center_x, y - center_y
        along = dx * math.cos(angle) + dy * math.sin(angle)
        across = -dx * math.sin(angle) + dy * math.cos(angle)
        if (along / axis_x) ** 2 + (across / axis_y) ** 2 <= 1.0:
            total += intensity
    return total


class TestSineSignal(TestCase):
    def test_values(self):
        signal = sine_signal(linspace(-1, 1, 0.01))
        self.assertEqual(signal.grid.count, 201)
        self.assertAlmostEqual(signal.values[125], 1.0, places=12)
        self.assertAlmostEqual(signal.values[0], 0.0, places=12)
        self.assertAlmostEqual(signal.values[50], -1.0, places=12)


class TestSheppLogan(TestCase):
    def test_interior_pixels_hold_the_sum_of_intensities(self):
        image = shepp_logan(64)
        points = image.grid_x.points()
        # pixels whose squares lie inside the same set of ellipses
        for row, column in ((32, 32), (32, 20), (47, 32), (5, 32)):
            self.assertAlmostEqual(image.values[row, column], intensity_at(points[column], points[row]), places=12)
        self.assertAlmostEqual(image.values[32, 32], 1.02, places=12)
        self.assertEqual(image.values[0, 0], 0.0)
        self.assertEqual(image.values[63, 63], 0.0)

    def test_shape_and_range(self):
        image = shepp_logan(256, workers=4)
        self.assertEqual(image.values.shape, (256, 256))
        self.assertAlmostEqual(image.grid_x.step, 2.0 / 256)
        self.assertGreaterEqual(image.values.min(), 0.0)
        self.assertLessEqual(image.values.max(), 2.0 + 1e-12)
        shown = display_values(image)
        self.assertEqual(shown.max(), 1.0)
        self.assertEqual(shown.min(), 0.0)

    def test_consistent_across_resolutions(self):
        fine = shepp_logan(256).values
        coarse = shepp_logan(64).values
        blocks = fine.reshape(64, 4, 64, 4).mean(axis=(1, 3))
        np.testing.assert_allclose(blocks, coarse, rtol=0, atol=1e-12)

    def test_symmetric_about_the_vertical_axis_outside_the_tilted_ellipses(self):
        image = shepp_logan(64).values
        np.testing.assert_allclose(image[:, 0:10], image[:, 63:53:-1], atol=1e-12)

    def test_invalid_size(self):
        with self.assertRaises(InvalidArgumentException):
            shepp_logan(15)
        with self.assertRaises(InvalidArgumentException):
            shepp_logan(32.5)


class TestEllipse(TestCase):
    def test_rotation(self):
        ellipse = Ellipse((0.0, 0.0), (0.5, 0.1), math.pi / 2, 1.0)
        self.assertTrue(ellipse.contains(0.0, 0.45))
        self.assertFalse(ellipse.contains(0.45, 0.0))

    def test_invalid_axes(self):
        with self.assertRaises(InvalidArgumentException):
            Ellipse((0.0, 0.0), (0.0, 0.1), 0.0, 1.0)


class TestBlobAndZero(TestCase):
    def test_blob_profile(self):
        grid_x, grid_y = square_image_grids(65)
        blob = gaussian_blob((grid_x, grid_y), width=0.2)
        self.assertAlmostEqual(blob.values[32, 32], 1.0, places=12)
        radius = 0.2 * math.sqrt(2.0 * math.log(2.0))
        x, y = blob.mesh()
        half = np.abs(np.hypot(x, y) - radius) < 1e-2
        self.assertTrue(half.any())
        np.testing.assert_allclose(blob.values[half], 0.5, atol=0.035)
        self.assertAlmostEqual(blob.values.sum() * blob.pixel_area / (2.0 * math.pi * 0.2 ** 2), 1.0, delta=0.01)

    def test_invalid_width(self):
        with self.assertRaises(InvalidArgumentException):
            gaussian_blob(square_image_grids(8), width=0.0)

    def test_make_phantom(self):
        self.assertEqual(make_phantom('zero', 16).values.sum(), 0.0)
        self.assertEqual(zero_image(8).values.shape, (8, 8))
        self.assertEqual(make_phantom('blob', 16).values.shape, (16, 16))
        with self.assertRaises(InvalidArgumentException):
            make_phantom('lena', 16)
