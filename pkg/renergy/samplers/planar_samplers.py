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
| Planar samplers: eigenvalues of the complex Ginibre ensemble and zeros of
| the truncated planar Gaussian analytic function.

Both raw point sets have density 1/pi in their bulk. They are divided by
sqrt(pi) to reach density one, cut to the central disk of radius half the
natural scale, and the square inscribed in that disk is translated to
[0, side)^2.
"""

import math
import logging
import numpy as np

from renergy.utils.errors import ConvergenceError
from renergy.utils.specfun import log_gamma
from renergy.energy.configuration import PointConfiguration2D
from renergy.samplers.sampler import Sampler, SamplerSpec, GINIBRE, GAF_ZEROS, make_rng

__all__ = [
    'BULK_FRACTION',
    'bulk_window',
    'ginibre_eigenvalues',
    'gaf_roots',
    'GinibreSampler',
    'GafZerosSampler',
    'sample_ginibre',
    'sample_gaf_zeros',
]

logger = logging.getLogger(__name__)

BULK_FRACTION = 0.5
_SQRT_PI = math.sqrt(math.pi)


def bulk_window(size):
    """
    Side of the retained square for a matrix dimension or polynomial degree
    ``size``: the square inscribed in the density-one disk of radius
    0.5 sqrt(size / pi).
    """
    radius = BULK_FRACTION * math.sqrt(size) / _SQRT_PI
    return math.sqrt(2.0) * radius


def _bulk_configuration(raw, size):
    side = bulk_window(size)
    z = np.asarray(raw) / _SQRT_PI
    half = 0.5 * side
    keep = (np.abs(z.real) < half) & (np.abs(z.imag) < half)
    return PointConfiguration2D(z[keep] + (half + 1j * half), side)


def ginibre_eigenvalues(matrix_dim, rng):
    """Eigenvalues of a matrix with iid standard complex Gaussian entries (E|g|^2 = 1)."""
    shape = (matrix_dim, matrix_dim)
    g = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2.0)
    try:
        return np.linalg.eigvals(g)
    except np.linalg.LinAlgError as e:
        raise ConvergenceError('Ginibre eigensolver failed for dimension %d: %s' % (matrix_dim, e))


def gaf_roots(degree, rng):
    """
    All ``degree`` roots of sum_{k <= degree} xi_k z^k / sqrt(k!) with iid
    standard complex Gaussian xi_k.

    The polynomial is solved in the variable t = z / sqrt(degree), whose
    coefficients stay within floating point range.
    """
    k = np.arange(degree + 1, dtype=float)
    xi = (rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)) / math.sqrt(2.0)
    log_scale = 0.5 * k * math.log(degree) - 0.5 * log_gamma(k + 1.0)
    coefs = xi * np.exp(log_scale - np.max(log_scale))
    try:
        t = np.polynomial.polynomial.polyroots(coefs)
    except np.linalg.LinAlgError as e:
        raise ConvergenceError('GAF root finder failed for degree %d: %s' % (degree, e))
    if not np.all(np.isfinite(t)):
        raise ConvergenceError('GAF root finder returned non-finite roots for degree %d' % degree)
    return t * math.sqrt(degree)


class GinibreSampler(Sampler):
    """Bulk eigenvalues of a finite Ginibre matrix at density one."""
    def __init__(self, spec):
        assert spec.process == GINIBRE, "GinibreSampler needs a Ginibre spec."
        super(GinibreSampler, self).__init__(spec)

    def sample(self, rng):
        size = self.spec.matrix_dim
        return _bulk_configuration(ginibre_eigenvalues(size, rng), size)


class GafZerosSampler(Sampler):
    """Bulk zeros of the truncated Gaussian analytic function at density one."""
    def __init__(self, spec):
        assert spec.process == GAF_ZEROS, "GafZerosSampler needs a GafZeros spec."
        super(GafZerosSampler, self).__init__(spec)

    def sample(self, rng):
        size = self.spec.degree
        return _bulk_configuration(gaf_roots(size, rng), size)


def sample_ginibre(matrix_dim, seed=0):
    """One bulk Ginibre configuration in the window ``bulk_window(matrix_dim)``."""
    spec = SamplerSpec(GINIBRE, seed=seed, matrix_dim=matrix_dim)
    return GinibreSampler(spec).sample(make_rng(seed))


def sample_gaf_zeros(degree, seed=0):
    """One bulk configuration of GAF zeros in the window ``bulk_window(degree)``."""
    spec = SamplerSpec(GAF_ZEROS, seed=seed, degree=degree)
    return GafZerosSampler(spec).sample(make_rng(seed))
