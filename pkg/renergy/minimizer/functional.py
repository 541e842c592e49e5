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
| The functional F(k) = int log|x| k(x)^2 dx on transforms k = 1_A^ of
| measure-one sets, evaluated on the Fourier side by quadrature and on the
| spatial side through the autocorrelation of A.
"""

import math
import logging
import multiprocessing
import numpy as np

from renergy.utils.errors import QuadratureError
from renergy.utils.specfun import EULER_GAMMA, LOG_PI, LOG_2PI, log_gamma
from renergy.utils.quadrature import (adaptive_gauss, composite_gauss, log_weighted,
        algebraic_weighted, piecewise_quad, gauss_legendre_rule, richardson_extrapolate)
from renergy.processes.cluster_functions import INVERSE_SQUARE, custom_cluster_function
from renergy.processes.expectations import t2_mass, t2_log_moment
from renergy.processes.sine_integrals import sinc_square_integrals
from renergy.minimizer.set_families import (IntervalUnion, Annulus, Disk, Rectangle,
        _RadialSet)

__all__ = [
    'SWEEP_COLUMNS',
    'DEFAULT_ALPHAS',
    'functional_F',
    'functional_F_with_error',
    'plancherel_mass',
    'functional_F_spatial',
    'radial_spatial_integral',
    'spatial_limit',
    'extrapolated_spatial',
    'build_family',
    'minimality_scan',
]

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ['family', 'parameter', 'F_value', 'error_bound']
DEFAULT_ALPHAS = (0.1, 0.05, 0.025)

TOLERANCE_1D = 1e-5
TOLERANCE_2D = 2e-3
RADIAL_CUTOFF = 256.0
RECTANGLE_CUTOFF = 128.0
SPATIAL_TOLERANCE = 1e-9
PIECE_TOLERANCE = 1e-12
ANGULAR_PANELS = 128
_ROW_CHUNK = 256


def _interval_cluster_function(A):
    frequencies = A.positive_frequencies()
    count = len(frequencies)
    diffs = [abs(e - f) for e in frequencies for f in frequencies if abs(e - f) > 1e-12]
    diffs += [e + f for e in frequencies for f in frequencies]
    spread = max(1.0, 1.0 / (math.pi * min(diffs))) if diffs else 1.0
    return custom_cluster_function(lambda r: A.k_transform(r) ** 2, 1, INVERSE_SQUARE,
            tail_coefficient=count / (2.0 * math.pi ** 2),
            tail_bound=count * count / math.pi ** 2 * spread, name=repr(A))


def _radial_moment(A, log_weight):
    """2 pi int_0^inf r [log r] k(r)^2 dr with the mean tail of k^2 beyond the cutoff."""
    R = RADIAL_CUTOFF
    func = lambda r: 2.0 * math.pi * r * A.radial_k(r) ** 2
    c = A.tail_coefficient()
    if log_weight:
        near, e1 = log_weighted(func, 0.0, 1.0)
        far, e2 = adaptive_gauss(lambda r: np.log(r) * func(r), 1.0, R, tol=1e-8, panel_width=0.5)
        tail = c / math.pi * (math.log(R) + 1.0) / R
        remainder = c * (math.log(R) + 1.0) / R ** 2
    else:
        near, e1 = adaptive_gauss(func, 0.0, 1.0, tol=1e-12)
        far, e2 = adaptive_gauss(func, 1.0, R, tol=1e-9, panel_width=0.5)
        tail = c / (math.pi * R)
        remainder = c / R ** 2
    return near + far + tail, e1 + e2 + remainder


def _angular_average(A, radii):
    """int_0^{2 pi} k(r cos t, r sin t)^2 dt for each r, by symmetry 4 times the quarter."""
    nodes, weights = gauss_legendre_rule(16)
    edges = np.linspace(0.0, 0.5 * math.pi, ANGULAR_PANELS + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    theta = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    cos_t, sin_t = np.cos(theta), np.sin(theta)
    radii = np.asarray(radii, dtype=float)
    out = np.empty_like(radii)
    for start in range(0, len(radii), _ROW_CHUNK):
        r = radii[start: start + _ROW_CHUNK, None]
        k = A.k_transform(np.stack([r * cos_t[None, :], r * sin_t[None, :]], axis=-1))
        out[start: start + _ROW_CHUNK] = 4.0 * (k * k).dot(w)
    return out


def _rectangle_functional(A):
    R = RECTANGLE_CUTOFF
    func = lambda r: r * _angular_average(A, r)
    near, e1 = log_weighted(func, 0.0, 1.0, tol=1e-10)
    far, e2 = adaptive_gauss(lambda r: np.log(r) * func(r), 1.0, R, tol=1e-6, panel_width=0.5)
    s = A.side_a + A.side_b
    tail = s * (math.log(R) + 1.0) / (math.pi ** 2 * R)
    remainder = 4.0 * s * (math.log(R) + 1.0) / (math.pi ** 2 * R * R)
    return near + far + tail, e1 + e2 + remainder


def functional_F_with_error(A):
    """
    F(A) = int log|x| k_A(x)^2 dx and its error bound.

    1D sets go through the cluster function machinery with T2 = k_A^2.
    Radial 2D sets use a radial quadrature with the mean Bessel tail, the
    rectangle a polar quadrature with the angular average of k_A^2 taken first.

    Raises:
        QuadratureError: when the bound exceeds 1e-5 (1D) or 2e-3 (2D).
    """
    if A.dimension == 1:
        value, error = t2_log_moment(_interval_cluster_function(A))
        tolerance = TOLERANCE_1D
    elif isinstance(A, _RadialSet):
        value, error = _radial_moment(A, log_weight=True)
        tolerance = TOLERANCE_2D
    elif isinstance(A, Rectangle):
        value, error = _rectangle_functional(A)
        tolerance = TOLERANCE_2D
    else:
        raise ValueError('Unsupported set family: %r' % A)
    if error > tolerance:
        raise QuadratureError('F(%r): error bound %.3g exceeds %.3g' % (A, error, tolerance),
                value=value, error=error)
    logger.debug('F({}) = {} +- {}'.format(A, value, error))
    return value, error


def functional_F(A):
    """
    F(A) = int log|x| k_A(x)^2 dx.

    Example:
        .. code-block:: python

            functional_F(IntervalUnion([]))     # 1 - gamma - log(2 pi)
    """
    return functional_F_with_error(A)[0]


def plancherel_mass(A):
    """int k_A^2 as (value, error); equals |A| = 1."""
    if A.dimension == 1:
        return t2_mass(_interval_cluster_function(A))
    if isinstance(A, _RadialSet):
        return _radial_moment(A, log_weight=False)
    if isinstance(A, Rectangle):
        m, m_err, _, _ = sinc_square_integrals()
        # int a^2 sinc(a x)^2 dx = a int sinc^2 for each side
        full = 2.0 * m
        return full * full * A.side_a * A.side_b, 4.0 * full * m_err
    raise ValueError('Unsupported set family: %r' % A)


def _phi(t):
    t = np.abs(np.asarray(t, dtype=float))
    return np.where(t > 0, t * np.log(np.where(t > 0, t, 1.0)), 0.0)


def _pair_sum(A, func):
    """sum_{i,j} func(b_i - a_j) - func(a_i - a_j) - func(b_i - b_j) + func(a_i - b_j)."""
    a, b = A.lefts, A.rights
    return math.fsum(np.ravel(func(b[:, None] - a[None, :]) - func(a[:, None] - a[None, :])
            - func(b[:, None] - b[None, :]) + func(a[:, None] - b[None, :])))


def _radial_breakpoints(A):
    """0, the radii where f_A changes branch, 1 and the support radius, in order."""
    R, r0 = A.outer_radius, A.inner_radius
    top = A.support_radius()
    kinks = set(k for k in (2.0 * r0, R - r0, R + r0, 1.0) if 0.0 < k < top)
    return [0.0] + sorted(kinks) + [top]


def radial_spatial_integral(A, alpha, tol=SPATIAL_TOLERANCE):
    """
    int_0^inf (f_A(r) - 1_{r<1}) r^{alpha-1} dr for a radial set, alpha >= 0;
    alpha = 0 gives the logarithmic finite part.

    The range is split where f_A has kinks. On the first piece (f_A(r) - 1) / r
    is smooth and r^alpha is taken by the algebraic weight rule.

    Returns:
        (value, error)

    Raises:
        QuadratureError: when the error bound exceeds ``tol``.
    """
    assert alpha >= 0, "alpha must be non-negative."
    f = A.radial_autocorrelation
    slope = -2.0 * (A.outer_radius + A.inner_radius)
    points = _radial_breakpoints(A)

    def _head(r):
        r = np.asarray(r, dtype=float)
        return np.where(r > 0, (f(r) - 1.0) / np.where(r > 0, r, 1.0), slope)

    def _body(r):
        r = np.asarray(r, dtype=float)
        return (f(r) - (r < 1.0)) * r ** (alpha - 1.0)

    head, head_err = algebraic_weighted(_head, 0.0, points[1], alpha, tol=PIECE_TOLERANCE)
    body, body_err = piecewise_quad(_body, points[1:], tol=PIECE_TOLERANCE)
    value, error = head + body, head_err + body_err
    if error > tol:
        raise QuadratureError('radial spatial integral of %r at alpha=%r: error bound %.3g '
                'exceeds %.3g' % (A, alpha, error, tol), value=value, error=error)
    return value, error


def _rectangle_angular(A, func):
    """4 int_0^{pi/2} func(theta, rho(theta)) d theta, split where rho changes branch."""
    a, b = A.side_a, A.side_b
    corner = math.atan2(b, a)

    def _integrand(theta):
        c, s = np.cos(theta), np.sin(theta)
        rho = np.minimum(a / np.maximum(c, 1e-300), b / np.maximum(s, 1e-300))
        return func(c, s, rho)

    return 4.0 * (composite_gauss(_integrand, 0.0, corner, 64)
            + composite_gauss(_integrand, corner, 0.5 * math.pi, 64))


def spatial_limit(A):
    """
    F(A) from the autocorrelation f_A, without any Fourier transform:

        1D: F = 1 - (gamma + log 2 pi) - S / 2 with S = sum over endpoint
            pairs of +-|t| log|t|, the closed form of
            -(1/2) f.p. int f_A(w) / |w| dw;
        2D: F = -(gamma + log pi) - (1 / 2 pi) int (f_A(w) - 1_{|w|<1}) / |w|^2 dw.
    """
    if A.dimension == 1:
        return 1.0 - EULER_GAMMA - LOG_2PI - 0.5 * _pair_sum(A, _phi)
    if isinstance(A, _RadialSet):
        value, _ = radial_spatial_integral(A, 0.0)
        finite_part = 2.0 * math.pi * value
    elif isinstance(A, Rectangle):
        a, b = A.side_a, A.side_b
        finite_part = _rectangle_angular(A, lambda c, s, rho:
                -(b * c + a * s) * rho + 0.5 * c * s * rho * rho + np.log(rho))
    else:
        raise ValueError('Unsupported set family: %r' % A)
    return -(EULER_GAMMA + LOG_PI) - finite_part / (2.0 * math.pi)


def functional_F_spatial(A, alpha):
    """
    The regularized value I_alpha(A) = (1 - int |x|^{-alpha} k_A(x)^2 dx) / alpha,
    computed on the spatial side:

        1D: I = 1/alpha - (2/alpha) Gamma(1 - alpha) sin(pi alpha / 2)
                (2 pi)^{alpha-1} int int 1_A(y) 1_A(z) |y - z|^{alpha-1}
        2D: I = 1/alpha - (1/alpha) pi^{alpha-1} Gamma(1 - alpha/2) / Gamma(alpha/2)
                int f_A(w) |w|^{alpha-2} dw

    I_alpha increases to F(A) as alpha decreases to 0.
    """
    assert 0 < alpha < 0.5, "alpha must lie in (0, 0.5)."
    if A.dimension == 1:
        second = lambda t: np.abs(t) ** (alpha + 1.0) / (alpha * (alpha + 1.0))
        double_integral = _pair_sum(A, second)
        prefactor = 2.0 / alpha * math.exp(log_gamma(1.0 - alpha)) * \
                math.sin(0.5 * math.pi * alpha) * (2.0 * math.pi) ** (alpha - 1.0)
        return 1.0 / alpha - prefactor * double_integral
    if isinstance(A, _RadialSet):
        value, _ = radial_spatial_integral(A, alpha)
        moment = 2.0 * math.pi * (value + 1.0 / alpha)
    elif isinstance(A, Rectangle):
        a, b = A.side_a, A.side_b
        moment = _rectangle_angular(A, lambda c, s, rho: rho ** alpha / alpha
                - (b * c + a * s) * rho ** (alpha + 1.0) / (alpha + 1.0)
                + c * s * rho ** (alpha + 2.0) / (alpha + 2.0))
    else:
        raise ValueError('Unsupported set family: %r' % A)
    constant = math.exp((alpha - 1.0) * LOG_PI + log_gamma(1.0 - 0.5 * alpha)
            - log_gamma(0.5 * alpha))
    return (1.0 - constant * moment) / alpha


def extrapolated_spatial(A, alphas=DEFAULT_ALPHAS):
    """Richardson extrapolation of I_alpha(A) to alpha = 0 over halving alphas."""
    values = [functional_F_spatial(A, alpha) for alpha in alphas]
    return richardson_extrapolate(values, ratio=alphas[0] / alphas[1], first_order=1)


def build_family(family, parameter):
    """
    Member of a one-parameter sweep.

    Args:
        family(str): 'two-interval' (gap), 'rectangle' (aspect), 'annulus'
            (inner radius) or 'disk'.
        parameter(float): the sweep parameter.
    """
    if family == 'two-interval':
        return IntervalUnion([parameter]) if parameter > 0 else IntervalUnion([])
    elif family == 'rectangle':
        return Rectangle(parameter)
    elif family == 'annulus':
        return Annulus(parameter) if parameter > 0 else Disk()
    elif family == 'disk':
        return Disk()
    else:
        raise ValueError('Unsupported set family: %s' % family)


def _scan_point(task):
    family, parameter = task
    value, error = functional_F_with_error(build_family(family, parameter))
    return {'family': family, 'parameter': parameter, 'F_value': value, 'error_bound': error}


def minimality_scan(family, parameters, threads=1):
    """
    F over a parameter grid of one family, in grid order.

    Returns:
        list of dicts with keys ``SWEEP_COLUMNS``.
    """
    tasks = [(family, float(p)) for p in parameters]
    workers = max(1, min(int(threads), len(tasks)))
    if workers > 1:
        pool = multiprocessing.Pool(workers)
        try:
            rows = pool.map(_scan_point, tasks)
        finally:
            pool.close()
            pool.join()
    else:
        rows = [_scan_point(task) for task in tasks]
    best = min(rows, key=lambda row: row['F_value'])
    logger.info('minimality scan {}: minimum F={:.6f} at parameter {}'.format(
            family, best['F_value'], best['parameter']))
    return rows
