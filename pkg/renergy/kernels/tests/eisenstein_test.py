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
Tests for the 2D torus kernel.
"""

import math
import unittest
import numpy as np
from hypothesis import given, settings, strategies as st

from renergy.kernels.eisenstein import (EisensteinConfig, eisenstein_kronecker, eisenstein_fourier,
        eisenstein_near_origin, eisenstein_kernel, torus_mean_EN)
from renergy.utils.errors import SingularityError

off_lattice = st.tuples(st.floats(min_value=0.1, max_value=0.9), st.floats(min_value=0.1, max_value=0.9))


class EisensteinTest(unittest.TestCase):
    def test_half_period(self):
        for N in [1.0, 7.0, 100.0]:
            self.assertAlmostEqual(eisenstein_kronecker(complex(N / 2, N / 2), N),
                    -math.pi * math.log(2.0), delta=1e-6)

    def test_near_origin(self):
        N = 10.0
        x = 1e-4 * N
        residual = eisenstein_kronecker(x, N) - eisenstein_near_origin(x, N)
        self.assertLess(abs(residual), 1e-3)

    def test_kernel_switches_to_asymptote(self):
        cfg = EisensteinConfig(singularity_radius=1e-3)
        x = 1e-5
        self.assertAlmostEqual(eisenstein_kernel(x, 1.0, cfg), eisenstein_near_origin(x, 1.0, cfg), places=12)
        self.assertRaises(SingularityError, eisenstein_kronecker, x, 1.0, cfg)
        self.assertRaises(SingularityError, eisenstein_kernel, 0.0, 1.0)

    @settings(max_examples=40, deadline=None)
    @given(off_lattice)
    def test_periodic(self, uv):
        N = 7.0
        x = complex(uv[0], uv[1]) * N
        value = eisenstein_kronecker(x, N)
        self.assertAlmostEqual(eisenstein_kronecker(x + N, N), value, places=9)
        self.assertAlmostEqual(eisenstein_kronecker(x + 1j * N, N), value, places=9)

    @settings(max_examples=40, deadline=None)
    @given(off_lattice)
    def test_scale_and_symmetry(self, uv):
        z = complex(uv[0], uv[1])
        value = eisenstein_kronecker(z, 1.0)
        self.assertAlmostEqual(eisenstein_kronecker(100.0 * z, 100.0), value, places=9)
        self.assertAlmostEqual(eisenstein_kronecker(z.conjugate(), 1.0), value, places=9)
        self.assertAlmostEqual(eisenstein_kronecker(1j * z, 1.0), value, places=9)

    def test_fourier_agreement(self):
        N = 21.0
        x = complex(N / 3, N / 7)
        self.assertLess(abs(eisenstein_fourier(x, N) - eisenstein_kronecker(x, N)), 0.05)

    def test_fourier_agreement_random(self):
        rng = np.random.RandomState(0)
        uv = rng.uniform(0.1, 0.9, size=(100, 2))
        x = uv[:, 0] + 1j * uv[:, 1]
        cfg = EisensteinConfig(fourier_cutoff=128)
        diff = np.abs(eisenstein_fourier(x, 1.0, cfg) - eisenstein_kronecker(x, 1.0, cfg))
        self.assertLess(diff.max(), 0.02)

    def test_pair_input(self):
        self.assertEqual(eisenstein_kronecker(np.array([0.3, 0.2]), 1.0),
                eisenstein_kronecker(0.3 + 0.2j, 1.0))

    def test_torus_mean(self):
        self.assertLess(abs(torus_mean_EN(5.0, grid=64)), 0.05)
        self.assertLess(abs(torus_mean_EN(5.0, grid=256)), 0.01)

    def test_config_dict(self):
        cfg = EisensteinConfig(product_terms=12, fourier_cutoff=32, singularity_radius=1e-5)
        self.assertEqual(EisensteinConfig.from_dict(cfg.to_dict()).to_dict(), cfg.to_dict())


if __name__ == '__main__':
    unittest.main()
