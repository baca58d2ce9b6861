import os
import shutil
import tempfile

import numpy as np
from django.test import TestCase

from core_grids.exceptions import InvalidArgumentException
from core_grids.grids import Grid1D, SampledSignal, SampledImage, square_image_grids
from core_grids.io import (save_signal_csv, load_signal_csv, save_image_csv, load_image_csv, to_pgm_bytes,
                           save_pgm)


class TestCSV(TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_signal_file_is_exact(self):
        grid = Grid1D(-1, 0.01, 201)
        signal = SampledSignal(grid, np.sin(2 * np.pi * grid.points()) / 3.0)
        path = os.path.join(self.directory, 'signal.csv')
        save_signal_csv(signal, path)
        loaded = load_signal_csv(path)
        self.assertTrue(loaded.same_grid(signal))
        np.testing.assert_array_equal(loaded.values, signal.values)

    def test_image_file(self):
        grid_x, grid_y = square_image_grids(8)
        x, y = np.meshgrid(grid_x.points(), grid_y.points())
        image = SampledImage(grid_x, grid_y, x + 10 * y)
        path = os.path.join(self.directory, 'image.csv')
        save_image_csv(image, path)
        loaded = load_image_csv(path)
        self.assertTrue(loaded.same_grid(image))
        np.testing.assert_array_equal(loaded.values, image.values)

    def test_missing_columns(self):
        path = os.path.join(self.directory, 'bad.csv')
        with open(path, 'w') as bad_file:
            bad_file.write('t,v\n0,1\n1,2\n')
        with self.assertRaises(InvalidArgumentException):
            load_signal_csv(path)

    def test_non_uniform_positions(self):
        path = os.path.join(self.directory, 'uneven.csv')
        with open(path, 'w') as uneven_file:
            uneven_file.write('x,value\n0,1\n1,2\n3,4\n')
        with self.assertRaises(InvalidArgumentException):
            load_signal_csv(path)


class TestPGM(TestCase):
    def test_header_and_flipped_rows(self):
        data = to_pgm_bytes(np.array([[0.0, 1.0], [2.0, 3.0]]))
        header = b'P5\n2 2\n255\n'
        self.assertTrue(data.startswith(header))
        self.assertEqual(list(bytearray(data[len(header):])), [170, 255, 0, 85])

    def test_constant_image_is_black(self):
        data = to_pgm_bytes(np.full((3, 4), 7.0))
        self.assertEqual(data[:len(b'P5\n4 3\n255\n')], b'P5\n4 3\n255\n')
        self.assertEqual(set(bytearray(data[len(b'P5\n4 3\n255\n'):])), {0})

    def test_save_is_deterministic(self):
        directory = tempfile.mkdtemp()
        try:
            first, second = os.path.join(directory, 'a.pgm'), os.path.join(directory, 'b.pgm')
            values = np.random.RandomState(3).rand(16, 16)
            save_pgm(values, first)
            save_pgm(values, second)
            with open(first, 'rb') as a, open(second, 'rb') as b:
                self.assertEqual(a.read(), b.read())
        finally:
            shutil.rmtree(directory)
