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
Tests for the Selberg cumulants.
"""

import math
import unittest
from hypothesis import given, settings, strategies as st

from renergy.montecarlo.selberg import (selberg_log_partition, selberg_cumulant_generating,
        selberg_mean, selberg_variance, selberg_cumulants_by_differences, u_beta, v_beta)

GAMMA = 0.57721566490153286


class SelbergTest(unittest.TestCase):
    def test_limits(self):
        self.assertAlmostEqual(u_beta(2.0), 1.0 - GAMMA, places=13)
        self.assertAlmostEqual(u_beta(1.0), 2.0 - GAMMA - math.log(2.0), places=13)
        self.assertAlmostEqual(u_beta(4.0), 1.5 - GAMMA - math.log(2.0), places=13)
        self.assertAlmostEqual(v_beta(2.0), 2.0 - math.pi ** 2 / 6.0, places=13)

    def test_two_points(self):
        self.assertAlmostEqual(selberg_mean(2, 2.0), math.log(2.0) - 0.5, places=13)

    def test_large_n(self):
        for beta in (1.0, 2.0, 4.0):
            self.assertAlmostEqual(selberg_mean(1000, beta), u_beta(beta), delta=1e-3)
        n = 10000
        self.assertAlmostEqual(n * selberg_variance(n, 2.0), v_beta(2.0), delta=1e-3)

    def test_variance_positive(self):
        for beta in (0.5, 1.0, 2.0, 4.0, 8.0):
            values = [selberg_variance(n, beta) for n in (2, 3, 8, 64, 1024)]
            self.assertTrue(all(v > 0 for v in values))
            self.assertLess(values[-1], values[2])

    def test_generating_function(self):
        self.assertEqual(selberg_cumulant_generating(0.0, 10, 2.0), 0.0)
        # Z(2) = n! for the circular unitary ensemble
        self.assertAlmostEqual(selberg_log_partition(6, 2.0), math.log(720.0), places=12)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=2, max_value=200), st.floats(min_value=0.5, max_value=8.0))
    def test_finite_differences(self, n, beta):
        mean, variance = selberg_cumulants_by_differences(n, beta)
        self.assertAlmostEqual(mean, selberg_mean(n, beta), delta=1e-8)
        self.assertAlmostEqual(variance, selberg_variance(n, beta), delta=1e-7)

    def test_domain(self):
        self.assertRaises(AssertionError, selberg_mean, 1, 2.0)
        self.assertRaises(AssertionError, selberg_variance, 4, 0.0)
        self.assertRaises(AssertionError, u_beta, -1.0)


if __name__ == '__main__':
    unittest.main()
