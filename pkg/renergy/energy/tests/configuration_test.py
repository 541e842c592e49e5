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
Tests for point configurations and the point-set file format.
"""

import os
import shutil
import tempfile
import unittest
import numpy as np

from renergy.energy.configuration import (PointConfiguration, PointConfiguration1D,
        PointConfiguration2D, load_point_configuration, save_point_configuration)
from renergy.utils.errors import ConfigurationParseError


class ConfigurationTest(unittest.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def _write(self, text):
        path = os.path.join(self.tmp_dir, 'points.txt')
        with open(path, 'w') as f:
            f.write(text)
        return path

    def test_wrap(self):
        cfg = PointConfiguration1D([-1.0, 10.0, 3.5], 10)
        np.testing.assert_allclose(cfg.points, [9.0, 0.0, 3.5])
        cfg = PointConfiguration2D([[11.0, -2.0]], 10)
        self.assertEqual(cfg.points[0], 1.0 + 8.0j)

    def test_dict(self):
        cfg = PointConfiguration2D([0.5 + 1j, 2 + 2j], 4)
        back = PointConfiguration.from_dict(cfg.to_dict())
        self.assertIsInstance(back, PointConfiguration2D)
        np.testing.assert_array_equal(back.points, cfg.points)
        self.assertEqual(back.window, 4.0)

    def test_load_1d(self):
        cfg = load_point_configuration(self._write('# lattice\nN=3\n0\n1  # one\n\n2\n'))
        self.assertIsInstance(cfg, PointConfiguration1D)
        np.testing.assert_array_equal(cfg.points, [0.0, 1.0, 2.0])
        self.assertEqual(cfg.window, 3.0)

    def test_load_2d(self):
        cfg = load_point_configuration(self._write('N=2\n0 0\n1,1\n'))
        self.assertEqual(cfg.dimension, 2)
        np.testing.assert_array_equal(cfg.points, [0j, 1 + 1j])

    def test_save_load(self):
        cfg = PointConfiguration1D([0.1, 1.0 / 3, 2.5], 3)
        path = save_point_configuration(cfg, os.path.join(self.tmp_dir, 'out.txt'))
        np.testing.assert_array_equal(load_point_configuration(path).points, cfg.points)

    def test_parse_errors(self):
        cases = [
            ('0\n1\n', 1),
            ('N=abc\n', 1),
            ('N=-2\n', 1),
            ('N=3\n0\n1 2\n', 3),
            ('N=3\n0\nx\n', 3),
            ('N=3\n\n0\ninf\n', 4),
        ]
        for text, line_number in cases:
            with self.assertRaises(ConfigurationParseError) as ctx:
                load_point_configuration(self._write(text))
            self.assertEqual(ctx.exception.line_number, line_number)

    def test_missing_header(self):
        with self.assertRaises(ConfigurationParseError) as ctx:
            load_point_configuration(self._write('# nothing\n'))
        self.assertIsNone(ctx.exception.line_number)

    def test_forced_dimension(self):
        self.assertRaises(ConfigurationParseError, load_point_configuration,
                self._write('N=3\n0 1\n'), 1)


if __name__ == '__main__':
    unittest.main()
