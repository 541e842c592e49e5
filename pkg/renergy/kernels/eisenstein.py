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
| The 2D torus kernel E_N(x) on the square torus of side N.

E_N is evaluated from the second Kronecker limit formula (primary, exponentially
convergent product in q = exp(-2 pi)) and from the truncated lattice sum
(diagnostic). Points of the plane are complex numbers.
"""

import math
import logging
import numpy as np

from renergy.utils.errors import SingularityError
from renergy.utils.specfun import LOG_2, dedekind_eta_at_i

__all__ = [
    'EisensteinConfig',
    'as_plane_points',
    'eisenstein_kronecker',
    'eisenstein_fourier',
    'eisenstein_near_origin',
    'eisenstein_kernel',
    'torus_mean_EN',
]

logger = logging.getLogger(__name__)

_Q = math.exp(-2.0 * math.pi)
_FOURIER_CHUNK = 1 << 22


class EisensteinConfig(object):
    """
    Truncation controls for the torus kernel.

    Args:
        product_terms(int): number of factors kept in the q-product.
        fourier_cutoff(int): lattice radius |p|_inf <= cutoff of the Fourier sum.
        singularity_radius(float): exclusion radius around lattice points, in
            units of N. Inside it only the near-origin asymptote is used.
    """
    def __init__(self, product_terms=10, fourier_cutoff=64, singularity_radius=1e-6):
        super(EisensteinConfig, self).__init__()
        assert int(product_terms) >= 5, "product_terms must be >= 5."
        assert int(fourier_cutoff) >= 8, "fourier_cutoff must be >= 8."
        assert 0 < singularity_radius < 0.5, "singularity_radius must lie in (0, 0.5)."
        self.product_terms = int(product_terms)
        self.fourier_cutoff = int(fourier_cutoff)
        self.singularity_radius = float(singularity_radius)

    @classmethod
    def from_dict(cls, config):
        return cls(**config)

    def to_dict(self):
        return {
            'product_terms': self.product_terms,
            'fourier_cutoff': self.fourier_cutoff,
            'singularity_radius': self.singularity_radius,
        }


DEFAULT_EISENSTEIN_CONFIG = EisensteinConfig()


def as_plane_points(x):
    """
    Convert complex numbers, ``(re, im)`` pairs or arrays of shape (..., 2)
    into a complex ndarray.
    """
    arr = np.asarray(x)
    if np.iscomplexobj(arr):
        return arr.astype(complex)
    arr = arr.astype(float)
    if arr.ndim >= 1 and arr.shape[-1] == 2:
        return arr[..., 0] + 1j * arr[..., 1]
    if arr.ndim == 0:
        return arr + 0j
    raise TypeError('Invalid argument type: %s of %s' % (type(x), x))


def _reduced_coordinates(x, N):
    z = as_plane_points(x) / float(N)
    u = z.real - np.floor(z.real + 0.5)
    v = z.imag - np.floor(z.imag + 0.5)
    return u, v


def _check_singularity(u, v, cfg, name):
    if np.any(np.hypot(u, v) < cfg.singularity_radius):
        raise SingularityError('%s: point within %g N of a lattice point' % (
                name, cfg.singularity_radius))


def _kronecker_reduced(u, v, product_terms):
    # log|f(u - iv, i)| with |p| = exp(2 pi v)
    log_f = -math.pi / 6.0 + LOG_2 + 0.5 * np.log(
            np.sin(math.pi * u) ** 2 + np.sinh(math.pi * v) ** 2)
    cos_u = np.cos(2.0 * math.pi * u)
    for k in range(1, product_terms + 1):
        qk = _Q ** k
        for modulus in (np.exp(2.0 * math.pi * v), np.exp(-2.0 * math.pi * v)):
            a = qk * modulus
            log_f = log_f + 0.5 * np.log1p(-2.0 * a * cos_u + a * a)
    return -2.0 * math.pi * (log_f - math.pi * v * v)


def eisenstein_kronecker(x, N, cfg=None):
    """
    E_N(x) from the second Kronecker limit formula,
    E_N(x) = -2 pi log|f(conj(x)/N, i) exp(-pi (Im x / N)^2)|.

    Only moduli enter, so no branch of the complex logarithm is ever chosen.
    The truncation error of the product is below 1e-20 for 10 factors.

    Args:
        x(complex|ndarray): displacement(s) in the plane.
        N(float): side of the torus.
        cfg(EisensteinConfig): truncation controls.

    Returns:
        E_N(x), a float or ndarray.

    Raises:
        SingularityError: x lies within ``singularity_radius * N`` of N Z^2.
    """
    cfg = cfg or DEFAULT_EISENSTEIN_CONFIG
    u, v = _reduced_coordinates(x, N)
    _check_singularity(u, v, cfg, 'eisenstein_kronecker')
    value = _kronecker_reduced(u, v, cfg.product_terms)
    return float(value) if np.ndim(value) == 0 else value


def eisenstein_fourier(x, N, cfg=None):
    """
    Truncated lattice sum sum'_{|p|_inf <= K} cos(2 pi p.x / N) / |p|^2.

    Converges slowly; meant as a cross-check of ``eisenstein_kronecker``.
    """
    cfg = cfg or DEFAULT_EISENSTEIN_CONFIG
    u, v = _reduced_coordinates(x, N)
    _check_singularity(u, v, cfg, 'eisenstein_fourier')
    shape = np.shape(u)
    u = np.ravel(u)
    v = np.ravel(v)
    K = cfg.fourier_cutoff
    m, n = np.meshgrid(np.arange(-K, K + 1), np.arange(-K, K + 1), indexing='ij')
    m = m.ravel().astype(float)
    n = n.ravel().astype(float)
    nonzero = (m != 0) | (n != 0)
    m, n = m[nonzero], n[nonzero]
    weights = 1.0 / (m * m + n * n)
    out = np.empty(len(u))
    rows = max(1, _FOURIER_CHUNK // len(m))
    for start in range(0, len(u), rows):
        phase = 2.0 * math.pi * (u[start:start + rows, None] * m[None, :]
                + v[start:start + rows, None] * n[None, :])
        out[start:start + rows] = np.cos(phase).dot(weights)
    if len(shape) == 0:
        return float(out[0])
    return out.reshape(shape)


def eisenstein_near_origin(x, N, cfg=None):
    """
    Near-origin asymptote -2 pi log(2 pi |x| / N) - 4 pi log eta(i).
    """
    cfg = cfg or DEFAULT_EISENSTEIN_CONFIG
    u, v = _reduced_coordinates(x, N)
    r = np.hypot(u, v)
    if np.any(r == 0):
        raise SingularityError('eisenstein_near_origin: x is a lattice point')
    eta = dedekind_eta_at_i(cfg.product_terms)
    value = -2.0 * math.pi * np.log(2.0 * math.pi * r) - 4.0 * math.pi * math.log(eta)
    return float(value) if np.ndim(value) == 0 else value


def eisenstein_kernel(x, N, cfg=None):
    """
    E_N(x) everywhere off the lattice: the Kronecker product outside the
    singularity radius, the near-origin asymptote inside it.
    """
    cfg = cfg or DEFAULT_EISENSTEIN_CONFIG
    u, v = _reduced_coordinates(x, N)
    r = np.hypot(u, v)
    if np.any(r == 0):
        raise SingularityError('eisenstein_kernel: x is a lattice point')
    near = r < cfg.singularity_radius
    value = _kronecker_reduced(np.where(near, 0.25, u), np.where(near, 0.25, v), cfg.product_terms)
    if np.any(near):
        eta = dedekind_eta_at_i(cfg.product_terms)
        asymptote = -2.0 * math.pi * np.log(2.0 * math.pi * np.where(near, r, 1.0)) \
                - 4.0 * math.pi * math.log(eta)
        value = np.where(near, asymptote, value)
    return float(value) if np.ndim(value) == 0 else value


def torus_mean_EN(N, cfg=None, grid=64):
    """
    Midpoint-rule average of E_N over the torus on a grid x grid mesh of cell
    centres. Tends to 0 as the grid is refined.
    """
    cfg = cfg or DEFAULT_EISENSTEIN_CONFIG
    assert int(grid) >= 16, "grid must be >= 16."
    centres = (np.arange(int(grid)) + 0.5) / grid * N
    re, im = np.meshgrid(centres, centres, indexing='ij')
    values = eisenstein_kernel(re.ravel() + 1j * im.ravel(), N, cfg)
    return math.fsum(values) / values.size
