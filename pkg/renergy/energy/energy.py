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
| Renormalized energy W_N of finite configurations on the 1D and 2D torus.
"""

import math
import numpy as np

from renergy.utils.errors import CoincidentPointsError
from renergy.utils.specfun import LOG_2, dedekind_eta_at_i, log_2sin
from renergy.kernels.eisenstein import DEFAULT_EISENSTEIN_CONFIG, eisenstein_kernel
from renergy.energy.configuration import PointConfiguration1D, PointConfiguration2D

__all__ = [
    'EnergyReport',
    'energy_1d',
    'energy_2d',
    'lower_bound_1d',
    'circular_energy',
    'square_lattice_energy_2d',
]

_ROW_CHUNK = 256


class EnergyReport(object):
    """
    Value of W_N with diagnostics.

    Attributes:
        value(float): W_N.
        pair_count(int): number of ordered pairs, k (k - 1).
        point_count(int): k.
        min_gap(float): smallest torus distance between two points (the
            window itself when k < 2).
        window(float): N.
        dimension(int): 1 or 2.
    """
    def __init__(self, value, point_count, min_gap, window, dimension):
        super(EnergyReport, self).__init__()
        self.value = float(value)
        self.point_count = int(point_count)
        self.pair_count = self.point_count * (self.point_count - 1)
        self.min_gap = float(min_gap)
        self.window = float(window)
        self.dimension = int(dimension)

    def to_dict(self):
        return {
            'value': self.value,
            'pair_count': self.pair_count,
            'point_count': self.point_count,
            'min_gap': self.min_gap,
            'window': self.window,
            'dimension': self.dimension,
        }


def _row_chunks(k):
    for start in range(0, k, _ROW_CHUNK):
        yield start, min(k, start + _ROW_CHUNK)


def energy_1d(cfg):
    """
    W_N = -(1/N) sum_{i != j} log|2 sin(pi (a_i - a_j) / N)| + log N.

    The sum runs over ordered pairs, row block by row block, and the block
    sums are combined with ``math.fsum`` so the result does not depend on the
    block size.

    Args:
        cfg(PointConfiguration1D): the configuration.

    Returns:
        an ``EnergyReport``.

    Raises:
        CoincidentPointsError: two points coincide mod N.

    Example:
        .. code-block:: python

            energy_1d(PointConfiguration1D(np.arange(50), 50)).value     # 0.0
    """
    if not isinstance(cfg, PointConfiguration1D):
        raise TypeError('Invalid argument type: %s of %s' % (type(cfg), cfg))
    a = cfg.points
    N = cfg.window
    k = len(a)
    block_sums = []
    min_gap = N
    for start, stop in _row_chunks(k):
        diffs = a[start:stop, None] - a[None, :]
        off_diag = np.ones(diffs.shape, dtype=bool)
        off_diag[np.arange(stop - start), np.arange(start, stop)] = False
        diffs = diffs[off_diag]
        if diffs.size == 0:
            continue
        gaps = np.mod(diffs, N)
        gaps = np.minimum(gaps, N - gaps)
        min_gap = min(min_gap, float(gaps.min()))
        if min_gap <= 0:
            raise CoincidentPointsError('energy_1d: coincident points, the energy is -infinity')
        block_sums.append(float(np.sum(log_2sin(diffs, N))))
    value = -math.fsum(block_sums) / N + math.log(N)
    return EnergyReport(value, k, min_gap, N, 1)


def energy_2d(cfg, ecfg=None):
    """
    W_N = (1/(2 pi N^2)) sum_{i != j} E_N(a_i - a_j) + log(N / (2 pi eta(i)^2)).

    Args:
        cfg(PointConfiguration2D): the configuration.
        ecfg(EisensteinConfig): kernel truncation controls.

    Returns:
        an ``EnergyReport``.
    """
    if not isinstance(cfg, PointConfiguration2D):
        raise TypeError('Invalid argument type: %s of %s' % (type(cfg), cfg))
    ecfg = ecfg or DEFAULT_EISENSTEIN_CONFIG
    a = cfg.points
    N = cfg.window
    k = len(a)
    block_sums = []
    min_gap = N
    for start, stop in _row_chunks(k):
        diffs = a[start:stop, None] - a[None, :]
        off_diag = np.ones(diffs.shape, dtype=bool)
        off_diag[np.arange(stop - start), np.arange(start, stop)] = False
        diffs = diffs[off_diag]
        if diffs.size == 0:
            continue
        dx = np.mod(diffs.real, N)
        dy = np.mod(diffs.imag, N)
        dist = np.hypot(np.minimum(dx, N - dx), np.minimum(dy, N - dy))
        min_gap = min(min_gap, float(dist.min()))
        if min_gap <= 0:
            raise CoincidentPointsError('energy_2d: coincident points, the energy is -infinity')
        block_sums.append(float(np.sum(eisenstein_kernel(diffs, N, ecfg))))
    eta = dedekind_eta_at_i(ecfg.product_terms)
    value = math.fsum(block_sums) / (2.0 * math.pi * N * N) \
            + math.log(N / (2.0 * math.pi * eta * eta))
    return EnergyReport(value, k, min_gap, N, 2)


def lower_bound_1d(k, N):
    """
    (1 - k/N) log N + (k/N) log(N/k): no configuration of k points in [0, N)
    has a smaller W_N, and equally spaced points attain it.
    """
    assert int(k) >= 1, "k must be >= 1."
    assert N > 0, "N must be positive."
    ratio = float(k) / N
    return (1.0 - ratio) * math.log(N) + ratio * math.log(N / float(k))


def circular_energy(angles):
    """
    -(1/n) sum_{i != j} log|z_i - z_j| + log n for z_j = exp(i theta_j), the
    circular-ensemble form of W_n for the window N = n.
    """
    z = np.exp(1j * np.asarray(angles, dtype=float))
    n = len(z)
    dist = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(dist, 1.0)
    return -math.fsum(np.log(dist).ravel()) / n + math.log(n)


def square_lattice_energy_2d(product_terms=10):
    """W_N of the square lattice Z^2 in [0, N)^2, which equals -log(2 pi eta(i)^2) for every N."""
    eta = dedekind_eta_at_i(product_terms)
    return -(LOG_2 + math.log(math.pi) + 2.0 * math.log(eta))
