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
| Sampler base class and the configuration objects shared by all samplers.
"""

import logging
import numpy as np

__all__ = [
    'LATTICE',
    'POISSON',
    'CIRCULAR_BETA',
    'GINIBRE',
    'GAF_ZEROS',
    'McmcConfig',
    'DEFAULT_MCMC_CONFIG',
    'SamplerSpec',
    'Sampler',
    'make_rng',
]

logger = logging.getLogger(__name__)

LATTICE = 'Lattice'
POISSON = 'Poisson'
CIRCULAR_BETA = 'CircularBeta'
GINIBRE = 'Ginibre'
GAF_ZEROS = 'GafZeros'
PROCESSES = (LATTICE, POISSON, CIRCULAR_BETA, GINIBRE, GAF_ZEROS)


def make_rng(seed, stream=0):
    """
    Counter-based generator for replica stream ``stream`` of run ``seed``.

    Streams of one seed are statistically independent, so the draws of a
    stream do not depend on which worker runs it.
    """
    assert 0 <= int(seed) < 2 ** 64, "seed must be a 64-bit unsigned integer."
    sequence = np.random.SeedSequence([int(seed), int(stream)])
    return np.random.Generator(np.random.Philox(sequence))


class McmcConfig(object):
    """
    Controls of the Metropolis chains used by the circular beta-ensemble sampler.

    Args:
        burn_in_sweeps(int): sweeps discarded before recording; the proposal
            scale is adapted only during burn-in.
        thin_sweeps(int): sweeps between two recorded samples.
        proposal_scale(float): initial proposal standard deviation, in units
            of the mean spacing.
        target_acceptance(float): acceptance rate the adaptation aims at.
        num_chains(int): independent chains a run is split into. Fixed per
            run, so results do not depend on the number of workers.
        adapt_interval(int): sweeps between two scale updates.
    """
    def __init__(self, burn_in_sweeps=500, thin_sweeps=2, proposal_scale=0.5,
            target_acceptance=0.35, num_chains=8, adapt_interval=20):
        super(McmcConfig, self).__init__()
        assert int(burn_in_sweeps) >= 1, "burn_in_sweeps must be positive."
        assert int(thin_sweeps) >= 1, "thin_sweeps must be positive."
        assert proposal_scale > 0, "proposal_scale must be positive."
        assert 0.1 < target_acceptance < 0.6, "target_acceptance must lie in (0.1, 0.6)."
        assert int(num_chains) >= 1, "num_chains must be positive."
        assert int(adapt_interval) >= 1, "adapt_interval must be positive."
        self.burn_in_sweeps = int(burn_in_sweeps)
        self.thin_sweeps = int(thin_sweeps)
        self.proposal_scale = float(proposal_scale)
        self.target_acceptance = float(target_acceptance)
        self.num_chains = int(num_chains)
        self.adapt_interval = int(adapt_interval)

    @classmethod
    def from_dict(cls, config):
        return cls(**config)

    def to_dict(self):
        return {
            'burn_in_sweeps': self.burn_in_sweeps,
            'thin_sweeps': self.thin_sweeps,
            'proposal_scale': self.proposal_scale,
            'target_acceptance': self.target_acceptance,
            'num_chains': self.num_chains,
            'adapt_interval': self.adapt_interval,
        }


DEFAULT_MCMC_CONFIG = McmcConfig()


class SamplerSpec(object):
    """
    Which process to sample and where.

    Args:
        process(str): one of Lattice, Poisson, CircularBeta, Ginibre, GafZeros.
        window(float): torus side N. For CircularBeta it is the particle
            number n; for Ginibre and GafZeros it is derived from the matrix
            dimension or degree and may be left None.
        seed(int): 64-bit unsigned seed.
        beta(float): inverse temperature of CircularBeta.
        matrix_dim(int): Ginibre matrix dimension.
        degree(int): degree of the truncated Gaussian analytic function.
        dimension(int): 1 or 2, used by Lattice and Poisson.
    """
    def __init__(self, process, window=None, seed=0, beta=None, matrix_dim=None,
            degree=None, dimension=1):
        super(SamplerSpec, self).__init__()
        if process not in PROCESSES:
            raise ValueError('Unsupported process: %s' % process)
        if process == CIRCULAR_BETA:
            assert beta is not None and beta > 0, "CircularBeta needs beta > 0."
            assert window is not None and int(window) == window and window >= 2, \
                    "CircularBeta needs an integer window n >= 2."
        if process == GINIBRE:
            assert matrix_dim is not None and int(matrix_dim) >= 16, "Ginibre needs matrix_dim >= 16."
            dimension = 2
        if process == GAF_ZEROS:
            assert degree is not None and int(degree) >= 32, "GafZeros needs degree >= 32."
            dimension = 2
        if process in (LATTICE, POISSON, CIRCULAR_BETA):
            assert window is not None and window > 0, "window must be positive."
        assert dimension in (1, 2), "dimension must be 1 or 2."
        if process == CIRCULAR_BETA:
            assert dimension == 1, "CircularBeta lives on the line."
        self.process = process
        self.window = None if window is None else float(window)
        self.seed = int(seed)
        self.beta = None if beta is None else float(beta)
        self.matrix_dim = None if matrix_dim is None else int(matrix_dim)
        self.degree = None if degree is None else int(degree)
        self.dimension = int(dimension)

    def to_dict(self):
        return {
            'process': self.process,
            'window': self.window,
            'seed': self.seed,
            'beta': self.beta,
            'matrix_dim': self.matrix_dim,
            'degree': self.degree,
            'dimension': self.dimension,
        }


class Sampler(object):
    """
    This is an abstract class for point process samplers.

    ``sample`` draws one configuration from a generator. ``sample_chain``
    draws ``num_samples`` configurations from one stream; for independent
    samplers it repeats ``sample``, Markov chain samplers override it.
    """
    def __init__(self, spec):
        super(Sampler, self).__init__()
        self.spec = spec

    def sample(self, rng):
        """
        Draw one configuration.

        Args:
            rng(numpy.random.Generator): the stream to draw from.

        Returns:
            a ``PointConfiguration1D`` or ``PointConfiguration2D``.
        """
        raise NotImplementedError()

    def sample_chain(self, num_samples, rng):
        """
        Draw ``num_samples`` configurations from one stream.

        Returns:
            (configurations, acceptance) where acceptance is None for
            samplers without a Markov chain.
        """
        return [self.sample(rng) for _ in range(num_samples)], None
