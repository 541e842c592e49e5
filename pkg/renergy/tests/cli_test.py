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
Tests for the renergy command line.
"""

import io
import math
import os
import json
import shutil
import tempfile
import unittest
import contextlib
import pandas as pd

from renergy.cli import main, EXIT_OK, EXIT_DIVERGENT, EXIT_USAGE, EXIT_INPUT
from renergy.montecarlo.runner import RESULT_COLUMNS


def run(argv):
    stdout = io.StringIO()
    with contextlib.redirect_stdout(stdout):
        code = main(argv)
    text = stdout.getvalue()
    return code, json.loads(text) if text.strip() else None


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def _path(self, name, text=None):
        path = os.path.join(self.tmp_dir, name)
        if text is not None:
            with open(path, 'w') as f:
                f.write(text)
        return path

    def test_usage(self):
        self.assertEqual(run([])[0], EXIT_USAGE)
        with contextlib.redirect_stderr(io.StringIO()):
            self.assertEqual(run(['energy'])[0], EXIT_USAGE)
            self.assertEqual(run(['expect', '--process', 'bessel'])[0], EXIT_USAGE)

    def test_energy_lattice(self):
        points = self._path('lattice.txt', 'N=50\n' + ''.join('%d\n' % i for i in range(50)))
        out = self._path('energy.csv')
        code, payload = run(['energy', '--input', points, '--out', out])
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(payload['value'], 0.0, delta=1e-10)
        self.assertEqual(payload['point_count'], 50)
        self.assertTrue(os.path.exists(out + '.manifest.json'))

    def test_energy_bad_input(self):
        self.assertEqual(run(['energy', '--input', self._path('bad.txt', 'N=4\n1\nx\n')])[0], EXIT_INPUT)
        self.assertEqual(run(['energy', '--input', self._path('missing.txt')])[0], EXIT_INPUT)

    def test_expect(self):
        code, payload = run(['expect', '--process', 'sine', '--beta', '2'])
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(payload['value'], 0.42278433509846713, delta=1e-6)
        self.assertEqual(run(['expect', '--process', 'poisson'])[0], EXIT_DIVERGENT)
        self.assertEqual(run(['expect', '--process', 'sine', '--beta', '3'])[0], EXIT_USAGE)
        self.assertEqual(run(['expect', '--process', 'discrete-sine'])[0], EXIT_USAGE)
        code, payload = run(['expect', '--process', 'discrete-sine', '--rho', '1'])
        self.assertEqual(payload['value'], 0.0)

    def test_expect_reference_values(self):
        gamma = 0.57721566490153286
        cases = [
            (['--process', 'sine', '--beta', '1'], 2.0 - gamma - math.log(2.0)),
            (['--process', 'sine', '--beta', '2'], 1.0 - gamma),
            (['--process', 'sine', '--beta', '4'], 1.5 - gamma - math.log(2.0)),
            (['--process', 'ginibre'], -(gamma + math.log(math.pi)) / 2.0),
            (['--process', 'gaf'], -(1.0 + math.log(math.pi)) / 2.0),
            (['--process', 'sine-superposition', '--beta', '1', '--copies', '2'], 2.0 - gamma),
            (['--process', 'sine-decimated', '--beta', '2', '--decimation', 'deterministic'],
                    1.0 - gamma),
            (['--process', 'sine-decimated', '--beta', '4', '--decimation', 'deterministic'],
                    1.5 - gamma - math.log(2.0)),
            (['--process', 'discrete-sine', '--rho', '1'], 0.0),
        ]
        for args, expected in cases:
            code, payload = run(['expect'] + args)
            self.assertEqual(code, EXIT_OK, args)
            self.assertAlmostEqual(payload['value'], expected, places=7, msg=' '.join(args))
        code, payload = run(['expect', '--process', 'discrete-sine', '--rho', '1e-3'])
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(payload['value'], 1.0 - gamma, delta=1e-3)

    def test_expect_circular(self):
        code, payload = run(['expect', '--process', 'circular', '--beta', '2'])
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(payload['value'], 1.0 - 0.57721566490153286, places=7)
        code, payload = run(['expect', '--process', 'circular', '--beta', '0.5'])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(math.isfinite(payload['value']))
        self.assertEqual(run(['expect', '--process', 'circular', '--beta', '-1'])[0], EXIT_USAGE)

    def test_expect_rejected_arguments(self):
        code, _ = run(['expect', '--process', 'sine-superposition', '--copies', '0'])
        self.assertEqual(code, EXIT_USAGE)
        table = self._path('t2.csv', 'v,t2\n' + ''.join('%g,%g\n' % (0.5 * i, -0.1 * i) for i in range(6)))
        custom = ['expect', '--process', 'custom', '--table', table, '--tail_bound', '1']
        self.assertEqual(run(custom + ['--dimension', '2'])[0], EXIT_USAGE)
        short = self._path('short.csv', 'v,t2\n0.0,-1.0\n1.0,0.0\n')
        self.assertEqual(run(['expect', '--process', 'custom', '--table', short,
                '--tail_bound', '1'])[0], EXIT_USAGE)

    def test_expect_json(self):
        out = self._path('ginibre.json')
        code, _ = run(['expect', '--process', 'ginibre', '--format', 'json', '--out', out])
        self.assertEqual(code, EXIT_OK)
        with open(out) as f:
            rows = json.load(f)
        self.assertEqual(rows[0]['status'], 'Finite')
        self.assertAlmostEqual(rows[0]['value'], -0.86089870, places=7)

    def test_mc_lattice(self):
        out = self._path('lattice.csv')
        code, payload = run(['mc', '--process', 'lattice', '--n', '16', '--replicas', '100', '--out', out])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(payload['variance'], 0.0)
        df = pd.read_csv(out)
        self.assertEqual(list(df.columns), RESULT_COLUMNS)
        with open(out + '.manifest.json') as f:
            self.assertEqual(json.load(f)['command'], 'mc')

    def test_mc_replicas(self):
        code, _ = run(['mc', '--process', 'lattice', '--replicas', '50', '--out', self._path('x.csv')])
        self.assertEqual(code, EXIT_USAGE)

    def test_mc_bad_config(self):
        config = self._path('mcmc.json', '{"burn_in_sweeps": 0}')
        code, _ = run(['mc', '--process', 'circular', '--mcmc_config', config,
                '--out', self._path('x.csv')])
        self.assertEqual(code, EXIT_INPUT)

    def test_mc_reproducible(self):
        config = self._path('mcmc.json', json.dumps({'burn_in_sweeps': 20, 'adapt_interval': 5,
                'num_chains': 4}))
        outputs = []
        for threads in ('1', '2'):
            out = self._path('circular-%s.csv' % threads)
            code, _ = run(['mc', '--process', 'circular', '--n', '8', '--replicas', '100',
                    '--seed', '42', '--threads', threads, '--mcmc_config', config, '--out', out])
            self.assertEqual(code, EXIT_OK)
            with open(out, 'rb') as f:
                outputs.append(f.read())
        self.assertEqual(outputs[0], outputs[1])

    def test_mc_samples(self):
        samples = self._path('samples')
        points = self._path('points')
        code, _ = run(['mc', '--process', 'poisson', '--n', '10', '--replicas', '100',
                '--save_samples', samples, '--export_points', points, '--out', self._path('p.csv')])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(os.listdir(points)), 100)
        self.assertTrue(os.listdir(samples)[0].endswith('.npz'))

    def test_curve(self):
        out = self._path('u.csv')
        code, payload = run(['curve', '--name', 'u-beta', '--grid', '4', '--out', out])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(payload['points'], 4)
        self.assertEqual(list(pd.read_csv(out).columns), ['beta', 'u', 'v'])
        code, _ = run(['curve', '--name', 'u-beta', '--grid', '1', '--out', out])
        self.assertEqual(code, EXIT_USAGE)

    def test_variance_decay_curve(self):
        out = self._path('decay.csv')
        self.assertEqual(run(['curve', '--name', 'variance-decay', '--grid', '3', '--out', out])[0], EXIT_OK)
        df = pd.read_csv(out)
        self.assertEqual(list(df['n']), [8, 16, 32])


if __name__ == '__main__':
    unittest.main()
