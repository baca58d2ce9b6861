import math

import numpy as np
from django.test import TestCase

from admissibility.admissibility import compute_K
from admissibility.ridgelet_spec import RidgeletSpec
from core_grids.exceptions import InvalidArgumentException, GridMismatchException
from core_grids.grids import SampledSignal, ParamGrid, linspace, symmetric_grid
from ridgelet.plancherel import self_normalized, parseval_check, plancherel_check


def gaussian_signal(grid, center=0.0, width=0.2):
    return SampledSignal(grid, np.exp(-0.5 * ((grid.points() - center) / width) ** 2))


class TestSelfNormalization(TestCase):
    def test_normalized_ridgelet_has_unit_constant(self):
        psi = self_normalized(RidgeletSpec(1, 0))
        self.assertAlmostEqual(psi.scale, 1.0 / math.sqrt(2.0 * math.pi), places=9)
        self.assertAlmostEqual(compute_K(psi, psi).K.real, 1.0, places=7)

    def test_rejects_non_positive_constant(self):
        with self.assertRaises(InvalidArgumentException):
            RidgeletSpec(1, 0).normalized(0.0)


class TestPlancherel(TestCase):
    param_grid = ParamGrid([symmetric_grid(30, 0.25)], symmetric_grid(30, 0.25))

    def test_norm_is_preserved(self):
        signal = gaussian_signal(linspace(-1, 1, 0.01))
        lhs, rhs = plancherel_check(signal, RidgeletSpec(1, 0), self.param_grid, workers=4)
        self.assertAlmostEqual(rhs, 0.2 * math.sqrt(math.pi), delta=1e-6)
        self.assertGreaterEqual(lhs / rhs, 0.8)
        self.assertLessEqual(lhs / rhs, 1.2)

    def test_inner_product_is_preserved(self):
        grid = linspace(-1, 1, 0.01)
        f, g = gaussian_signal(grid, -0.1), gaussian_signal(grid, 0.15)
        lhs, rhs = parseval_check(f, g, RidgeletSpec(1, 0), self.param_grid, workers=4)
        self.assertLessEqual(abs(lhs - rhs), 0.2 * abs(rhs))

    def test_grid_mismatch(self):
        f = gaussian_signal(linspace(-1, 1, 0.1))
        g = gaussian_signal(linspace(-1, 1, 0.05))
        with self.assertRaises(GridMismatchException):
            parseval_check(f, g, RidgeletSpec(1, 0), self.param_grid)

    def test_refinement_converges_monotonically(self):
        signal = gaussian_signal(linspace(-1, 1, 0.01))
        defects = []
        for box, step in ((7.5, 0.5), (15, 0.25), (30, 0.125)):
            param_grid = ParamGrid([symmetric_grid(box, step)], symmetric_grid(box, step))
            lhs, rhs = plancherel_check(signal, RidgeletSpec(1, 0), param_grid, workers=4)
            defects.append(abs(lhs / rhs - 1.0))
        self.assertLess(defects[1], defects[0])
        self.assertLess(defects[2], defects[1])
        self.assertLessEqual(defects[2], 0.2)
