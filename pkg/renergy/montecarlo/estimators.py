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
| Error bars for correlated samples: autocorrelation, integrated
| autocorrelation time and batch means.
"""

import math
import logging
import numpy as np

__all__ = [
    'autocorrelation',
    'integrated_autocorrelation_time',
    'BatchMeans',
    'batch_means',
]

logger = logging.getLogger(__name__)

SOKAL_WINDOW = 5.0
BATCH_TAU_MULTIPLE = 10.0
MIN_BATCHES_PER_CHAIN = 2


def autocorrelation(x):
    """Normalized autocorrelation function of a 1D series, computed with the FFT."""
    x = np.asarray(x, dtype=float)
    n = len(x)
    centered = x - np.mean(x)
    size = 1 << int(math.ceil(math.log(max(2 * n, 2), 2)))
    f = np.fft.rfft(centered, n=size)
    acf = np.fft.irfft(f * np.conjugate(f), n=size)[:n]
    if acf[0] <= 0:
        out = np.zeros(n)
        out[0] = 1.0
        return out
    return acf / acf[0]


def integrated_autocorrelation_time(x, window=SOKAL_WINDOW):
    """
    tau = 1 + 2 sum_{t=1}^{M} rho(t), with the smallest cut-off M >= window * tau(M).

    Returns 1 for constant or very short series.
    """
    x = np.asarray(x, dtype=float)
    if len(x) < 4:
        return 1.0
    rho = autocorrelation(x)
    partial = 2.0 * np.cumsum(rho) - 1.0
    for m in range(1, len(x)):
        if m >= window * partial[m]:
            return max(1.0, float(partial[m]))
    return max(1.0, float(partial[-1]))


class BatchMeans(object):
    """
    Pooled batch-means estimate over independent chains.

    Attributes:
        mean(float): mean of all samples.
        variance(float): sample variance of all samples.
        std_error(float): standard error of ``mean``.
        effective_samples(float): variance / std_error^2.
        tau(float): mean integrated autocorrelation time of the chains.
        batch_length(int): samples per batch.
        num_batches(int): pooled number of batches.
    """
    def __init__(self, mean, variance, std_error, effective_samples, tau,
            batch_length, num_batches):
        super(BatchMeans, self).__init__()
        self.mean = mean
        self.variance = variance
        self.std_error = std_error
        self.effective_samples = effective_samples
        self.tau = tau
        self.batch_length = batch_length
        self.num_batches = num_batches


def batch_means(chains, batch_length=None):
    """
    Batch means over a list of chains.

    Without an explicit ``batch_length`` it is ten times the mean integrated
    autocorrelation time, reduced when a chain would hold fewer than two
    batches. Trailing samples that do not fill a batch are still counted in
    the mean and variance.

    Args:
        chains(list): list of 1D arrays, one per independent chain.
        batch_length(int): samples per batch, chosen automatically when None.

    Returns:
        a ``BatchMeans``.
    """
    chains = [np.asarray(c, dtype=float) for c in chains if len(c) > 0]
    assert len(chains) > 0, "no samples."
    values = np.concatenate(chains)
    total = len(values)
    if np.all(values == values[0]):
        return BatchMeans(float(values[0]), 0.0, 0.0, float(total), 1.0, 1, total)
    mean = math.fsum(values) / total
    variance = math.fsum((values - mean) ** 2) / max(1, total - 1)
    tau = float(np.mean([integrated_autocorrelation_time(c) for c in chains]))
    if batch_length is None:
        batch_length = int(math.ceil(BATCH_TAU_MULTIPLE * tau))
        shortest = min(len(c) for c in chains)
        batch_length = max(1, min(batch_length, shortest // MIN_BATCHES_PER_CHAIN))
    batches = []
    for c in chains:
        count = len(c) // batch_length
        if count > 0:
            batches.append(c[:count * batch_length].reshape(count, batch_length).mean(axis=1))
    batches = np.concatenate(batches)
    num_batches = len(batches)
    if num_batches < 2:
        std_error = math.sqrt(variance * tau / total)
    else:
        batch_mean = math.fsum(batches) / num_batches
        batch_var = math.fsum((batches - batch_mean) ** 2) / (num_batches - 1)
        std_error = math.sqrt(batch_var / num_batches)
    if std_error > 0:
        effective_samples = variance / std_error ** 2
    else:
        effective_samples = float(total)
    logger.debug('batch means: tau={:.3f} batch_length={} batches={}'.format(
            tau, batch_length, num_batches))
    return BatchMeans(mean, variance, std_error, effective_samples, tau,
            batch_length, num_batches)
