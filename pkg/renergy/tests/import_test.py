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
import unittest

class ImportTest(unittest.TestCase):
    def test_import_renergy_alone(self):
        import renergy

    def test_import_subpackages(self):
        from renergy import utils, kernels, energy, processes, samplers, montecarlo, minimizer
        self.assertTrue(hasattr(energy, 'energy_1d'))
        self.assertTrue(hasattr(processes, 'expectation_limit_1d'))
        self.assertTrue(hasattr(samplers, 'build_sampler'))


if __name__ == '__main__':
    unittest.main()
