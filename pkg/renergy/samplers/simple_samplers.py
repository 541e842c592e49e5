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
| Deterministic lattice and homogeneous Poisson samplers.
"""

import math
import numpy as np

from renergy.energy.configuration import PointConfiguration1D, PointConfiguration2D
from renergy.samplers.sampler import Sampler, LATTICE, POISSON, make_rng

__all__ = [
    'LatticeSampler',
    'PoissonSampler',
    'sample_lattice',
    'sample_poisson',
]


def sample_lattice(window, dimension=1):
    """
    The integer lattice inside [0, window)^dimension.

    Example:
        .. code-block:: python

            sample_lattice(5).points    # [0., 1., 2., 3., 4.]
    """
    assert window >= 1, "window must be >= 1."
    ticks = np.arange(int(math.floor(window)), dtype=float)
    if dimension == 1:
        return PointConfiguration1D(ticks, window)
    xs, ys = np.meshgrid(ticks, ticks, indexing='ij')
    return PointConfiguration2D(xs.ravel() + 1j * ys.ravel(), window)


def sample_poisson(spec, rng=None):
    """
    Density-one Poisson process: a Poisson(window^d) number of iid uniform
    points in [0, window)^d. Draws from ``make_rng(spec.seed)`` when no
    generator is given.
    """
    rng = make_rng(spec.seed) if rng is None else rng
    window = spec.window
    count = rng.poisson(window ** spec.dimension)
    if spec.dimension == 1:
        return PointConfiguration1D(rng.uniform(0.0, window, size=count), window)
    xy = rng.uniform(0.0, window, size=(count, 2))
    return PointConfiguration2D(xy[:, 0] + 1j * xy[:, 1], window)


class LatticeSampler(Sampler):
    """Always returns the lattice, so every statistic has zero variance."""
    def __init__(self, spec):
        assert spec.process == LATTICE, "LatticeSampler needs a Lattice spec."
        super(LatticeSampler, self).__init__(spec)
        self._config = sample_lattice(spec.window, spec.dimension)

    def sample(self, rng):
        return self._config


class PoissonSampler(Sampler):
    """Independent homogeneous Poisson configurations."""
    def __init__(self, spec):
        assert spec.process == POISSON, "PoissonSampler needs a Poisson spec."
        super(PoissonSampler, self).__init__(spec)

    def sample(self, rng):
        return sample_poisson(self.spec, rng)
