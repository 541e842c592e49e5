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
Initialize point process samplers.
"""

from renergy.samplers.sampler import *
from renergy.samplers.simple_samplers import *
from renergy.samplers.circular_beta import *
from renergy.samplers.planar_samplers import *
from renergy.samplers.configuration_dataset import *
from renergy.samplers.sampler_factory import *
