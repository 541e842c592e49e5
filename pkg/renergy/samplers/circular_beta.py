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
| Circular beta-ensemble sampler: single-particle Metropolis moves on the
| angles of n points on the unit circle with density prod |z_i - z_j|^beta.
"""

import math
import logging
import warnings
import numpy as np

from renergy.energy.configuration import PointConfiguration1D
from renergy.samplers.sampler import (Sampler, SamplerSpec, CIRCULAR_BETA,
        DEFAULT_MCMC_CONFIG, make_rng)

__all__ = [
    'ACCEPTANCE_RANGE',
    'CircularBetaSampler',
    'sample_circular_beta',
    'angles_to_configuration',
]

logger = logging.getLogger(__name__)

ACCEPTANCE_RANGE = (0.1, 0.6)
_MIN_SCALE = 1e-8


def angles_to_configuration(angles):
    """Map angles theta_j to the points a_j = n theta_j / (2 pi) in the window N = n."""
    angles = np.asarray(angles, dtype=float)
    n = len(angles)
    return PointConfiguration1D(n * np.mod(angles, 2.0 * math.pi) / (2.0 * math.pi), n)


class CircularBetaSampler(Sampler):
    """
    Metropolis chain for the circular beta-ensemble.

    One sweep proposes a Gaussian move for every particle in turn. The proposal
    scale is measured in mean spacings 2 pi / n and is adapted towards
    ``target_acceptance`` during burn-in only, so recorded samples come from a
    fixed, reversible kernel.

    Args:
        spec(SamplerSpec): a CircularBeta spec, window = n.
        mcmc(McmcConfig): chain controls.
    """
    def __init__(self, spec, mcmc=None):
        assert spec.process == CIRCULAR_BETA, "CircularBetaSampler needs a CircularBeta spec."
        super(CircularBetaSampler, self).__init__(spec)
        self.mcmc = mcmc or DEFAULT_MCMC_CONFIG
        self.n = int(spec.window)
        self.beta = spec.beta
        self.final_scale = None

    def _sweep(self, theta, scale, rng):
        n = self.n
        step = scale * 2.0 * math.pi / n
        moves = step * rng.standard_normal(n)
        log_u = np.log(rng.uniform(size=n))
        accepted = 0
        with np.errstate(divide='ignore'):
            for i in range(n):
                proposal = theta[i] + moves[i]
                new = np.abs(np.sin(0.5 * (proposal - theta)))
                old = np.abs(np.sin(0.5 * (theta[i] - theta)))
                new[i] = 1.0
                old[i] = 1.0
                delta = self.beta * (np.sum(np.log(new)) - np.sum(np.log(old)))
                if log_u[i] < delta:
                    theta[i] = math.fmod(proposal, 2.0 * math.pi)
                    accepted += 1
        return accepted

    def _burn_in(self, theta, rng):
        cfg = self.mcmc
        scale = cfg.proposal_scale
        accepted = 0
        steps = 0
        for sweep in range(1, cfg.burn_in_sweeps + 1):
            accepted += self._sweep(theta, scale, rng)
            steps += self.n
            if sweep % cfg.adapt_interval == 0:
                rate = float(accepted) / steps
                scale *= math.exp((rate - cfg.target_acceptance) / cfg.target_acceptance)
                scale = min(max(scale, _MIN_SCALE), float(self.n))
                accepted = steps = 0
        return scale

    def sample_chain(self, num_samples, rng):
        """
        Run one chain from equally spaced points under a random rotation.

        Returns:
            (configurations, acceptance): ``num_samples`` thinned samples and
            the acceptance rate over the recorded part of the chain.
        """
        n = self.n
        theta = 2.0 * math.pi * np.arange(n) / n + rng.uniform(0.0, 2.0 * math.pi)
        scale = self._burn_in(theta, rng)
        self.final_scale = scale
        configs = []
        accepted = 0
        for _ in range(num_samples):
            for _ in range(self.mcmc.thin_sweeps):
                accepted += self._sweep(theta, scale, rng)
            configs.append(angles_to_configuration(theta))
        steps = max(1, num_samples * self.mcmc.thin_sweeps * n)
        acceptance = float(accepted) / steps
        low, high = ACCEPTANCE_RANGE
        if num_samples > 0 and not low < acceptance < high:
            message = 'circular beta={} n={}: acceptance {:.3f} outside ({}, {}) after adaptation'.format(
                    self.beta, n, acceptance, low, high)
            logger.warning(message)
            warnings.warn(message)
        return configs, acceptance

    def sample(self, rng):
        configs, _ = self.sample_chain(1, rng)
        return configs[0]


def sample_circular_beta(n, beta, mcmc=None, seed=0):
    """
    One post-burn-in sample of the circular beta-ensemble with n points, as a
    configuration in the window N = n.
    """
    spec = SamplerSpec(CIRCULAR_BETA, window=n, seed=seed, beta=beta)
    return CircularBetaSampler(spec, mcmc).sample(make_rng(seed))
