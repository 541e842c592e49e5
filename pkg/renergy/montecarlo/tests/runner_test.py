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
Tests for the Monte Carlo runner.
"""

import math
import os
import unittest
import warnings
import numpy as np

from renergy.montecarlo.runner import RESULT_COLUMNS, run_mc, clt_probe, _chain_sizes
from renergy.montecarlo.selberg import selberg_mean, selberg_variance
from renergy.samplers.sampler import LATTICE, POISSON, CIRCULAR_BETA, McmcConfig, SamplerSpec
from renergy.utils.errors import DegenerateDistributionError

SLOW = os.environ.get('RENERGY_SLOW_TESTS') == '1'


class RunnerTest(unittest.TestCase):
    def test_chain_sizes(self):
        self.assertEqual(_chain_sizes(10, 4), [3, 3, 2, 2])
        self.assertEqual(sum(_chain_sizes(1001, 8)), 1001)

    def test_lattice(self):
        result = run_mc(SamplerSpec(LATTICE, window=32), replicas=100, seed=1)
        self.assertAlmostEqual(result.mean, 0.0, delta=1e-10)
        self.assertEqual(result.variance, 0.0)
        self.assertEqual(result.std_error, 0.0)
        self.assertTrue(result.converged)
        self.assertEqual(result.n, 32)
        self.assertEqual(list(result.to_row().keys()), RESULT_COLUMNS)

    def test_too_few_replicas(self):
        self.assertRaises(ValueError, run_mc, SamplerSpec(LATTICE, window=4), replicas=99)

    def test_poisson(self):
        result = run_mc(SamplerSpec(POISSON, window=20.0), replicas=200, seed=3,
                keep_configurations=True)
        self.assertEqual(len(result.dataset), 200)
        np.testing.assert_allclose(result.dataset.energies(), result.energies)
        self.assertEqual(result.lower_bound_violations, 0)
        self.assertIsNone(result.acceptance)

    def test_thread_invariance(self):
        spec = SamplerSpec(CIRCULAR_BETA, window=8, beta=2.0)
        mcmc = McmcConfig(burn_in_sweeps=40, adapt_interval=10, num_chains=4)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            single = run_mc(spec, mcmc, replicas=120, seed=9, threads=1)
            multi = run_mc(spec, mcmc, replicas=120, seed=9, threads=3)
        np.testing.assert_array_equal(single.energies, multi.energies)
        self.assertEqual(single.to_row(), multi.to_row())
        self.assertEqual(single.lower_bound_violations, 0)
        self.assertAlmostEqual(single.selberg_mean, selberg_mean(8, 2.0), places=14)
        self.assertAlmostEqual(single.std_error,
                math.sqrt(single.variance / single.effective_samples), places=12)

    def test_clt_refuses(self):
        self.assertRaises(DegenerateDistributionError, clt_probe, SamplerSpec(LATTICE, window=8))
        self.assertRaises(ValueError, clt_probe, SamplerSpec(POISSON, window=8), replicas=100)


@unittest.skipUnless(SLOW, 'set RENERGY_SLOW_TESTS=1')
class SelbergOracleTest(unittest.TestCase):
    def test_mean_and_variance(self):
        spec = SamplerSpec(CIRCULAR_BETA, window=32, beta=2.0)
        result = run_mc(spec, McmcConfig(thin_sweeps=4), replicas=40000, seed=2021, threads=4)
        self.assertLess(abs(result.mean - selberg_mean(32, 2.0)), 3.0 * result.std_error)
        self.assertAlmostEqual(result.variance / selberg_variance(32, 2.0), 1.0, delta=0.15)

    def test_variance_decay(self):
        variances = []
        for n in (16, 32, 64):
            spec = SamplerSpec(CIRCULAR_BETA, window=n, beta=2.0)
            variances.append(run_mc(spec, McmcConfig(thin_sweeps=4), replicas=20000,
                    seed=7, threads=4).variance)
        self.assertTrue(variances[0] > variances[1] > variances[2])
        self.assertTrue(0.15 <= variances[2] / variances[0] <= 0.40)

    def test_clt(self):
        for beta in (1.0, 2.0):
            spec = SamplerSpec(CIRCULAR_BETA, window=64, beta=beta)
            skewness, distance = clt_probe(spec, McmcConfig(thin_sweeps=5), replicas=20000,
                    seed=11, threads=4)
            self.assertLessEqual(distance, 0.03)


if __name__ == '__main__':
    unittest.main()
