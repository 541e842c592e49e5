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
Tests for ConfigurationDataset.
"""

import os
import shutil
import tempfile
import unittest
import numpy as np

from renergy.energy.configuration import PointConfiguration1D, PointConfiguration2D, load_point_configuration
from renergy.samplers.configuration_dataset import ConfigurationDataset, export_point_sets


class ConfigurationDatasetTest(unittest.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()
        self.configs = [PointConfiguration2D(np.arange(k) * (1 + 0.5j), 8) for k in range(1, 6)]

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def test_save_and_load(self):
        dataset = ConfigurationDataset.from_configurations(self.configs, energies=[0.1, 0.2, 0.3, 0.4, 0.5])
        path = os.path.join(self.tmp_dir, 'samples')
        dataset.save_data(path)
        reloaded = ConfigurationDataset(npz_data_path=path)
        self.assertEqual(len(reloaded), 5)
        np.testing.assert_allclose(reloaded.energies(), [0.1, 0.2, 0.3, 0.4, 0.5])
        for i, cfg in enumerate(self.configs):
            np.testing.assert_array_equal(reloaded.configuration(i).points, cfg.points)

    def test_index(self):
        dataset = ConfigurationDataset.from_configurations(self.configs)
        self.assertEqual(len(dataset[1:4]), 3)
        self.assertEqual(len(dataset[[0, 2]]), 2)
        self.assertEqual(len(dataset[np.int64(2)]['points']), 3)
        self.assertRaises(TypeError, dataset.__getitem__, 'a')
        self.assertTrue(np.all(np.isnan(dataset.energies())))

    def test_exclusive_arguments(self):
        self.assertRaises(AssertionError, ConfigurationDataset)
        self.assertRaises(AssertionError, ConfigurationDataset, [], self.tmp_dir)

    def test_export(self):
        dataset = ConfigurationDataset.from_configurations([PointConfiguration1D([0.5, 2.25], 3)])
        paths = export_point_sets(dataset, os.path.join(self.tmp_dir, 'points'))
        self.assertEqual([os.path.basename(p) for p in paths], ['sample-00000.txt'])
        np.testing.assert_array_equal(load_point_configuration(paths[0]).points, [0.5, 2.25])


if __name__ == '__main__':
    unittest.main()
