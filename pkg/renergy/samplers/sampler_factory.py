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
| Build the sampler for a ``SamplerSpec``.
"""

from renergy.samplers.sampler import LATTICE, POISSON, CIRCULAR_BETA, GINIBRE, GAF_ZEROS
from renergy.samplers.simple_samplers import LatticeSampler, PoissonSampler
from renergy.samplers.circular_beta import CircularBetaSampler
from renergy.samplers.planar_samplers import GinibreSampler, GafZerosSampler

__all__ = ['build_sampler']


def build_sampler(spec, mcmc=None):
    """
    Args:
        spec(SamplerSpec): the process to sample.
        mcmc(McmcConfig): used by Markov chain samplers only.
    """
    if spec.process == LATTICE:
        return LatticeSampler(spec)
    elif spec.process == POISSON:
        return PoissonSampler(spec)
    elif spec.process == CIRCULAR_BETA:
        return CircularBetaSampler(spec, mcmc)
    elif spec.process == GINIBRE:
        return GinibreSampler(spec)
    elif spec.process == GAF_ZEROS:
        return GafZerosSampler(spec)
    else:
        raise ValueError('Unsupported process: %s' % spec.process)
