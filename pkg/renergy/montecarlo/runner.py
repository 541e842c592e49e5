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
| Replica-parallel Monte Carlo estimation of the renormalized energy.

A run is split into ``McmcConfig.num_chains`` streams. Stream c draws from
``make_rng(seed, c)`` and the streams are reduced in index order, so a result
is a function of (spec, mcmc, replicas, seed) only; the number of worker
processes changes nothing.
"""

import math
import time
import logging
import warnings
import multiprocessing
import numpy as np
from scipy import stats

from renergy.utils.errors import DegenerateDistributionError
from renergy.energy.energy import energy_1d, energy_2d, lower_bound_1d
from renergy.samplers.sampler import (CIRCULAR_BETA, LATTICE, GINIBRE, GAF_ZEROS,
        DEFAULT_MCMC_CONFIG, make_rng)
from renergy.samplers.sampler_factory import build_sampler
from renergy.samplers.circular_beta import ACCEPTANCE_RANGE
from renergy.samplers.configuration_dataset import ConfigurationDataset
from renergy.montecarlo.estimators import batch_means
from renergy.montecarlo.selberg import selberg_mean, selberg_variance

__all__ = [
    'MIN_REPLICAS',
    'MIN_CLT_REPLICAS',
    'RESULT_COLUMNS',
    'ExperimentResult',
    'run_mc',
    'clt_probe',
]

logger = logging.getLogger(__name__)

MIN_REPLICAS = 100
MIN_CLT_REPLICAS = 10000
RESULT_COLUMNS = ['process', 'beta', 'n', 'replicas', 'effective_samples', 'mean',
        'std_error', 'variance', 'selberg_mean', 'selberg_variance', 'seed']
_BOUND_SLACK = 1e-9


class ExperimentResult(object):
    """
    Summary of a Monte Carlo run.

    Attributes:
        mean(float): estimated E W_N.
        variance(float): sample variance of W_N over replicas.
        std_error(float): batch-means standard error of ``mean``, equal to
            sqrt(variance / effective_samples).
        replicas(int): number of recorded samples.
        effective_samples(float): replicas corrected for autocorrelation.
        seed(int): the run seed.
        wall_clock_ms(int): elapsed time.
        converged(bool): False when the chains failed their acceptance window
            or the effective sample size fell below replicas / 10.
        acceptance(float): mean acceptance rate of Markov chain samplers.
        tau(float): integrated autocorrelation time of W_N.
        lower_bound_violations(int): 1D replicas whose energy is below the
            lower bound for their point count.
        energies(ndarray): per-replica energies in stream order.
        dataset(ConfigurationDataset): the replicas, when they were kept.
    """
    def __init__(self, mean, variance, std_error, replicas, effective_samples, seed,
            wall_clock_ms, converged=True, acceptance=None, tau=1.0,
            lower_bound_violations=0, process=None, beta=None, n=None,
            selberg_mean=None, selberg_variance=None, energies=None, dataset=None):
        super(ExperimentResult, self).__init__()
        assert variance >= 0, "variance must be non-negative."
        self.mean = float(mean)
        self.variance = float(variance)
        self.std_error = float(std_error)
        self.replicas = int(replicas)
        self.effective_samples = float(effective_samples)
        self.seed = int(seed)
        self.wall_clock_ms = int(wall_clock_ms)
        self.converged = bool(converged)
        self.acceptance = acceptance
        self.tau = float(tau)
        self.lower_bound_violations = int(lower_bound_violations)
        self.process = process
        self.beta = beta
        self.n = n
        self.selberg_mean = selberg_mean
        self.selberg_variance = selberg_variance
        self.energies = energies
        self.dataset = dataset

    def to_row(self):
        """The CSV/JSON record, keyed by ``RESULT_COLUMNS``."""
        return {
            'process': self.process,
            'beta': self.beta,
            'n': self.n,
            'replicas': self.replicas,
            'effective_samples': self.effective_samples,
            'mean': self.mean,
            'std_error': self.std_error,
            'variance': self.variance,
            'selberg_mean': self.selberg_mean,
            'selberg_variance': self.selberg_variance,
            'seed': self.seed,
        }

    def diagnostics(self):
        return {
            'converged': self.converged,
            'acceptance': self.acceptance,
            'tau': self.tau,
            'lower_bound_violations': self.lower_bound_violations,
            'wall_clock_ms': self.wall_clock_ms,
        }


def _energy(config, ecfg):
    if config.dimension == 1:
        return energy_1d(config).value
    return energy_2d(config, ecfg).value


def _run_chain(task):
    sampler, count, seed, chain, ecfg, keep = task
    rng = make_rng(seed, chain)
    configs, acceptance = sampler.sample_chain(count, rng)
    energies = np.array([_energy(c, ecfg) for c in configs])
    violations = 0
    for config, value in zip(configs, energies):
        k = len(config)
        if config.dimension == 1 and k >= 1:
            bound = lower_bound_1d(k, config.window)
            if value < bound - _BOUND_SLACK * max(1.0, abs(bound)):
                violations += 1
    kept = [c.to_dict() for c in configs] if keep else None
    return energies, acceptance, violations, kept


def _chain_sizes(replicas, num_chains):
    base, extra = divmod(replicas, num_chains)
    return [base + (1 if c < extra else 0) for c in range(num_chains)]


def _size_parameter(spec):
    if spec.process == GINIBRE:
        return spec.matrix_dim
    if spec.process == GAF_ZEROS:
        return spec.degree
    return int(spec.window) if spec.window == int(spec.window) else spec.window


def run_mc(spec, mcmc=None, replicas=MIN_REPLICAS, seed=None, threads=1, ecfg=None,
        keep_configurations=False):
    """
    Estimate mean and variance of W_N over ``replicas`` samples of ``spec``.

    Args:
        spec(SamplerSpec): the process.
        mcmc(McmcConfig): chain controls; ``num_chains`` sets the stream count.
        replicas(int): recorded samples, at least 100.
        seed(int): run seed, ``spec.seed`` when None.
        threads(int): worker processes; does not affect the result.
        ecfg(EisensteinConfig): kernel controls for planar processes.
        keep_configurations(bool): also return the samples as a ``ConfigurationDataset``.

    Returns:
        an ``ExperimentResult``.
    """
    if replicas < MIN_REPLICAS:
        raise ValueError('run_mc needs at least %d replicas, got %d' % (MIN_REPLICAS, replicas))
    mcmc = mcmc or DEFAULT_MCMC_CONFIG
    seed = spec.seed if seed is None else int(seed)
    start = time.time()
    sampler = build_sampler(spec, mcmc)
    sizes = _chain_sizes(int(replicas), mcmc.num_chains)
    tasks = [(sampler, size, seed, chain, ecfg, keep_configurations)
            for chain, size in enumerate(sizes) if size > 0]
    workers = max(1, min(int(threads), len(tasks)))
    logger.info('run_mc {}: {} replicas in {} streams on {} worker(s), seed={}'.format(
            spec.process, replicas, len(tasks), workers, seed))
    if workers > 1:
        pool = multiprocessing.Pool(workers)
        try:
            outputs = pool.map(_run_chain, tasks)
        finally:
            pool.close()
            pool.join()
    else:
        outputs = [_run_chain(task) for task in tasks]

    chains = [out[0] for out in outputs]
    estimate = batch_means(chains)
    acceptances = [out[1] for out in outputs if out[1] is not None]
    acceptance = float(np.mean(acceptances)) if acceptances else None
    violations = sum(out[2] for out in outputs)

    converged = True
    low, high = ACCEPTANCE_RANGE
    if acceptances and not all(low < a < high for a in acceptances):
        converged = False
    if estimate.variance > 0 and estimate.effective_samples < replicas / 10.0:
        message = 'run_mc {}: effective sample size {:.1f} below replicas/10'.format(
                spec.process, estimate.effective_samples)
        logger.warning(message)
        warnings.warn(message)
        converged = False

    dataset = None
    if keep_configurations:
        data_list = []
        for out in outputs:
            for data, value in zip(out[3], out[0]):
                data['energy'] = np.array([value])
                data_list.append(data)
        dataset = ConfigurationDataset(data_list=data_list)

    exact_mean = exact_variance = None
    if spec.process == CIRCULAR_BETA:
        exact_mean = selberg_mean(int(spec.window), spec.beta)
        exact_variance = selberg_variance(int(spec.window), spec.beta)

    elapsed = int(round((time.time() - start) * 1000))
    logger.info('run_mc {}: mean={:.6f} std_error={:.2e} tau={:.2f} in {} ms'.format(
            spec.process, estimate.mean, estimate.std_error, estimate.tau, elapsed))
    return ExperimentResult(estimate.mean, estimate.variance, estimate.std_error,
            int(replicas), estimate.effective_samples, seed, elapsed,
            converged=converged, acceptance=acceptance, tau=estimate.tau,
            lower_bound_violations=violations, process=spec.process, beta=spec.beta,
            n=_size_parameter(spec), selberg_mean=exact_mean,
            selberg_variance=exact_variance, energies=np.concatenate(chains), dataset=dataset)


def clt_probe(spec, mcmc=None, replicas=MIN_CLT_REPLICAS, seed=None, threads=1, ecfg=None):
    """
    Distance of standardized W_N from the standard normal law.

    Circular beta-ensemble samples are standardized by the exact Selberg mean
    and variance, other processes by their empirical moments.

    Returns:
        (skewness, ks_distance): sample skewness and the Kolmogorov-Smirnov
        statistic against N(0, 1).

    Raises:
        DegenerateDistributionError: the process has a deterministic energy.
    """
    if spec.process == LATTICE:
        raise DegenerateDistributionError('the lattice has a deterministic energy, no CLT to probe')
    if replicas < MIN_CLT_REPLICAS:
        raise ValueError('clt_probe needs at least %d replicas, got %d' % (MIN_CLT_REPLICAS, replicas))
    result = run_mc(spec, mcmc, replicas, seed=seed, threads=threads, ecfg=ecfg)
    if result.variance == 0:
        raise DegenerateDistributionError('zero variance for %s, no CLT to probe' % spec.process)
    values = result.energies
    if result.selberg_mean is not None:
        z = (values - result.selberg_mean) / math.sqrt(result.selberg_variance)
    else:
        z = (values - result.mean) / math.sqrt(result.variance)
    skewness = float(stats.skew(z))
    distance = float(stats.kstest(z, 'norm').statistic)
    logger.info('clt_probe {}: skewness={:.4f} ks={:.4f}'.format(spec.process, skewness, distance))
    return skewness, distance
