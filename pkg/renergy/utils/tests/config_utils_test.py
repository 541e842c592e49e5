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
Tests for the json config loader.
"""

import os
import shutil
import tempfile
import unittest

from renergy.utils.config_utils import load_json_config
from renergy.utils.errors import ConfigurationParseError


class ConfigUtilsTest(unittest.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def _write(self, text):
        path = os.path.join(self.tmp_dir, 'config.json')
        with open(path, 'w') as f:
            f.write(text)
        return path

    def test_load(self):
        path = self._write('{"burn_in_sweeps": 10, "num_chains": 2}')
        self.assertEqual(load_json_config(path), {'burn_in_sweeps': 10, 'num_chains': 2})

    def test_malformed(self):
        path = self._write('{\n"a": 1,\n"b": \n}')
        with self.assertRaises(ConfigurationParseError) as ctx:
            load_json_config(path)
        self.assertEqual(ctx.exception.line_number, 4)
        self.assertIn(path, str(ctx.exception))

    def test_not_an_object(self):
        self.assertRaises(ConfigurationParseError, load_json_config, self._write('[1, 2]'))


if __name__ == '__main__':
    unittest.main()
