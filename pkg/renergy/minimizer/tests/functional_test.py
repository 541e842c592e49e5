#!/usr/bin/python
#-*-coding:utf-8-*-
#   Copyright (c) 2020 PaddlePaddle Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Tests for the ball-minimality functional.
"""

import math
import unittest

from renergy.minimizer.functional import (SWEEP_COLUMNS, functional_F, functional_F_with_error,
        plancherel_mass, spatial_limit, functional_F_spatial, radial_spatial_integral,
        extrapolated_spatial, build_family, minimality_scan, SPATIAL_TOLERANCE)
from renergy.minimizer.set_families import IntervalUnion, Disk, Annulus, Rectangle
from renergy.processes.cluster_functions import custom_cluster_function, INVERSE_SQUARE
from renergy.processes.expectations import expectation_limit_1d, FINITE
from renergy.utils.errors import QuadratureError

GAMMA = 0.57721566490153286
BALL_1D = 1.0 - GAMMA - math.log(2.0 * math.pi)


class FunctionalTest(unittest.TestCase):
    def test_ball(self):
        value, error = functional_F_with_error(IntervalUnion([]))
        self.assertAlmostEqual(value, BALL_1D, delta=1e-5)
        self.assertLessEqual(error, 1e-5)
        self.assertAlmostEqual(spatial_limit(IntervalUnion([])), BALL_1D, places=14)

    def test_ball_cluster_function(self):
        ball = IntervalUnion([])
        cf = custom_cluster_function(lambda r: ball.k_transform(r) ** 2, 1, INVERSE_SQUARE,
                tail_coefficient=1.0 / (2.0 * math.pi ** 2), tail_bound=1.0 / math.pi ** 2)
        limit = expectation_limit_1d(cf)
        self.assertEqual(limit.status, FINITE)
        self.assertAlmostEqual(limit.value, 1.0 - GAMMA, delta=1e-5)
        self.assertAlmostEqual(limit.value - math.log(2.0 * math.pi), functional_F(ball), delta=1e-5)

    def test_plancherel(self):
        self.assertAlmostEqual(plancherel_mass(IntervalUnion([]))[0], 1.0, delta=1e-6)
        self.assertAlmostEqual(plancherel_mass(IntervalUnion([0.4]))[0], 1.0, delta=1e-6)
        self.assertAlmostEqual(plancherel_mass(Disk())[0], 1.0, delta=1e-4)
        self.assertAlmostEqual(plancherel_mass(Annulus(0.2))[0], 1.0, delta=1e-4)
        self.assertAlmostEqual(plancherel_mass(Rectangle(2.0))[0], 1.0, delta=1e-8)

    def test_disk(self):
        self.assertAlmostEqual(functional_F(Disk()), -0.65, delta=0.02)
        self.assertAlmostEqual(functional_F(Disk()), spatial_limit(Disk()), delta=2e-3)

    def test_planar_ordering(self):
        disk = functional_F(Disk())
        square = functional_F(Rectangle(1.0))
        wide = functional_F(Rectangle(2.0))
        self.assertLess(disk, square)
        self.assertLess(square, wide)
        self.assertAlmostEqual(square, spatial_limit(Rectangle(1.0)), delta=2e-3)
        self.assertLess(disk, functional_F(Annulus(0.2)))

    def test_gap_sweep(self):
        rows = minimality_scan('two-interval', [0.0, 0.25, 0.5, 1.0])
        self.assertEqual(list(rows[0].keys()), SWEEP_COLUMNS)
        self.assertEqual([row['parameter'] for row in rows], [0.0, 0.25, 0.5, 1.0])
        best = min(rows, key=lambda row: row['F_value'])
        self.assertEqual(best['parameter'], 0.0)
        for row in rows:
            self.assertAlmostEqual(row['F_value'], spatial_limit(build_family('two-interval',
                    row['parameter'])), delta=1e-5)

    def test_parallel_scan(self):
        serial = minimality_scan('annulus', [0.0, 0.3])
        parallel = minimality_scan('annulus', [0.0, 0.3], threads=2)
        self.assertEqual(serial, parallel)


class SpatialTest(unittest.TestCase):
    def test_extrapolation(self):
        for A in (IntervalUnion([]), IntervalUnion([0.5]), Disk()):
            self.assertAlmostEqual(extrapolated_spatial(A), spatial_limit(A), delta=1e-3)
        self.assertAlmostEqual(extrapolated_spatial(IntervalUnion([])), BALL_1D, delta=1e-3)

    def test_monotone_in_alpha(self):
        for A in (IntervalUnion([]), Disk(), Rectangle(1.0)):
            values = [functional_F_spatial(A, alpha) for alpha in (0.2, 0.1, 0.05, 0.025)]
            self.assertTrue(all(a < b for a, b in zip(values, values[1:])), msg=repr(A))
            self.assertLess(values[-1], spatial_limit(A))

    def test_ball_minimal(self):
        alpha = 0.05
        ball = functional_F_spatial(IntervalUnion([]), alpha)
        self.assertGreaterEqual(functional_F_spatial(IntervalUnion([1.0]), alpha), ball)
        self.assertGreaterEqual(functional_F_spatial(Rectangle(1.0), alpha),
                functional_F_spatial(Disk(), alpha))

    def test_alpha_range(self):
        self.assertRaises(AssertionError, functional_F_spatial, Disk(), 0.0)
        self.assertRaises(AssertionError, functional_F_spatial, Disk(), 0.5)

    def test_build_family(self):
        self.assertIsInstance(build_family('two-interval', 0.0), IntervalUnion)
        self.assertIsInstance(build_family('annulus', 0.0), Disk)
        self.assertIsInstance(build_family('rectangle', 3.0), Rectangle)
        self.assertRaises(ValueError, build_family, 'triangle', 1.0)


class RadialSpatialTest(unittest.TestCase):
    def setUp(self):
        self.sets = [Disk(), Annulus(0.1), Annulus(0.3)]

    def test_autocorrelation_mass(self):
        # alpha = 2: 2 pi int f_A(r) r dr = |A|^2
        for A in self.sets:
            value, error = radial_spatial_integral(A, 2.0)
            self.assertAlmostEqual(2.0 * math.pi * (value + 0.5), 1.0, delta=1e-9, msg=repr(A))
            self.assertLessEqual(error, SPATIAL_TOLERANCE)

    def test_error_bound(self):
        for A in self.sets:
            for alpha in (0.0, 0.025, 0.2):
                _, error = radial_spatial_integral(A, alpha)
                self.assertLessEqual(error, SPATIAL_TOLERANCE, msg='%r alpha=%r' % (A, alpha))

    def test_resolved_without_warnings(self):
        with self.assertRaises(AssertionError):
            with self.assertLogs('renergy.utils.quadrature', level='WARNING'):
                for A in self.sets:
                    spatial_limit(A)
                    functional_F_spatial(A, 0.05)

    def test_annulus_matches_fourier_side(self):
        for r0 in (0.1, 0.3):
            A = Annulus(r0)
            self.assertAlmostEqual(spatial_limit(A), functional_F(A), delta=2e-3, msg=repr(A))

    def test_tolerance_is_enforced(self):
        with self.assertRaises(QuadratureError) as ctx:
            radial_spatial_integral(Annulus(0.3), 0.0, tol=-1.0)
        self.assertIsNotNone(ctx.exception.value)
        self.assertRaises(AssertionError, radial_spatial_integral, Disk(), -0.1)


if __name__ == '__main__':
    unittest.main()
