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
| Catalog of two-point cluster functions T2 = 1 - rho_2 of stationary
| density-one point processes, and the transforms that build new ones.
"""

import math
import logging
import numpy as np
import pandas as pd
from scipy.interpolate import CubicSpline

from renergy.utils.specfun import LOG_PI, LOG_2PI, sine_integral_si_big, sine_integral_si_small
from renergy.processes import sine_integrals

__all__ = [
    'SINE_BETA_1', 'SINE_BETA_2', 'SINE_BETA_4', 'GINIBRE', 'GAF', 'CUSTOM',
    'INVERSE_SQUARE', 'OSCILLATORY', 'EXPONENTIAL',
    'ClusterFunction',
    'TransformedForm',
    'sine_beta_cluster_function',
    'ginibre_cluster_function',
    'gaf_cluster_function',
    'poisson_cluster_function',
    'custom_cluster_function',
    'load_custom_cluster_function',
    'superpose',
    'random_decimation',
    'gaf_h',
]

logger = logging.getLogger(__name__)

SINE_BETA_1 = 'SineBeta1'
SINE_BETA_2 = 'SineBeta2'
SINE_BETA_4 = 'SineBeta4'
GINIBRE = 'Ginibre'
GAF = 'GAF'
CUSTOM = 'Custom'
KINDS = (SINE_BETA_1, SINE_BETA_2, SINE_BETA_4, GINIBRE, GAF, CUSTOM)

INVERSE_SQUARE = 'InverseSquare'
OSCILLATORY = 'Oscillatory'
EXPONENTIAL = 'Exponential'
TAIL_CLASSES = (INVERSE_SQUARE, OSCILLATORY, EXPONENTIAL)

_GAF_SERIES_LIMIT = 1e-2


class TransformedForm(object):
    """
    Integration-by-parts form of a cluster function whose raw log moment is
    only conditionally convergent.

    Args:
        mass_fn(callable): returns (int T2, error).
        log_moment_fn(callable): returns (int log|v| T2, error).
    """
    def __init__(self, mass_fn, log_moment_fn):
        super(TransformedForm, self).__init__()
        self.mass_fn = mass_fn
        self.log_moment_fn = log_moment_fn

    def mass(self):
        return self.mass_fn()

    def log_moment(self):
        return self.log_moment_fn()


class ClusterFunction(object):
    """
    A radial cluster function T2 with the metadata needed to integrate it.

    Args:
        kind(str): one of ``KINDS``.
        dimension(int): 1 or 2.
        evaluator(callable): vectorized map |v| -> T2.
        tail_class(str): one of ``TAIL_CLASSES``.
        tail_coefficient(float): ``a`` in the mean decay T2 ~ a / v^2 for
            InverseSquare tails.
        tail_bound(float): majorant constant used in the tail error bound.
        absolutely_convergent_form(TransformedForm): required for Oscillatory tails.
        components(list): (weight, scale, ClusterFunction) triples of a
            composite T2(v) = sum weight * T2_i(v / scale).
        name(str): label used in reports.
    """
    def __init__(self, kind, dimension, evaluator, tail_class,
            tail_coefficient=0.0, tail_bound=0.0,
            absolutely_convergent_form=None, components=None, name=None):
        super(ClusterFunction, self).__init__()
        if kind not in KINDS:
            raise ValueError('Unsupported cluster function kind: %s' % kind)
        if tail_class not in TAIL_CLASSES:
            raise ValueError('Unsupported tail class: %s' % tail_class)
        assert dimension in (1, 2), "dimension must be 1 or 2."
        if tail_class == OSCILLATORY and absolutely_convergent_form is None and not components:
            raise ValueError('Oscillatory cluster functions need an absolutely convergent form')
        self.kind = kind
        self.dimension = dimension
        self.evaluator = evaluator
        self.tail_class = tail_class
        self.tail_coefficient = float(tail_coefficient)
        self.tail_bound = float(tail_bound)
        self.absolutely_convergent_form = absolutely_convergent_form
        self.components = list(components or [])
        self.name = name or kind

    def __call__(self, v):
        """T2 at ``v``: a real displacement in 1D, complex or (x, y) in 2D."""
        v = np.asarray(v)
        if self.dimension == 2 and not np.iscomplexobj(v) and v.ndim >= 1 and v.shape[-1] == 2:
            r = np.hypot(v[..., 0], v[..., 1])
        else:
            r = np.abs(v).astype(float)
        value = self.evaluator(r)
        return float(value) if np.ndim(value) == 0 else value

    def __repr__(self):
        return 'ClusterFunction(%s, dimension=%d, tail=%s)' % (self.name, self.dimension, self.tail_class)


def _sine1(r):
    return np.sinc(r) ** 2 - sine_integrals.sinc_derivative(r) * sine_integral_si_small(math.pi * r) / math.pi


def _sine2(r):
    return np.sinc(r) ** 2


def _sine4(r):
    return np.sinc(2.0 * r) ** 2 - sine_integrals.sinc_derivative(2.0 * r) * \
            sine_integral_si_big(2.0 * math.pi * r) / math.pi


def _sine1_mass():
    m, m_err, _, _ = sine_integrals.sinc_square_integrals()
    return 4.0 * m - 1.0, 4.0 * m_err


def _sine1_log_moment():
    m, m_err, l, l_err = sine_integrals.sinc_square_integrals()
    cross, cross_err = sine_integrals.beta1_cross_term()
    limit = 4.0 * (LOG_2PI * m + l) + cross + sine_integrals.beta1_dirichlet_term()
    return limit - LOG_2PI, 4.0 * (LOG_2PI * m_err + l_err) + cross_err


def _sine4_mass():
    m, m_err, _, _ = sine_integrals.sinc_square_integrals()
    return 2.0 * m, 2.0 * m_err


def _sine4_log_moment():
    # 4 int_0^inf sinc(2v)^2 log(2 pi v) dv = 2 int_0^inf sinc(w)^2 log(pi w) dw
    m, m_err, l, l_err = sine_integrals.sinc_square_integrals()
    boundary, boundary_err = sine_integrals.beta4_boundary_term()
    limit = 2.0 * (LOG_PI * m + l) + boundary
    return limit - LOG_2PI, 2.0 * (LOG_PI * m_err + l_err) + boundary_err


def sine_beta_cluster_function(beta):
    """
    Cluster function of the sine-beta process for beta in {1, 2, 4}.

    Example:
        .. code-block:: python

            cf = sine_beta_cluster_function(2)
            cf(0.0)     # 1.0
    """
    if beta == 1:
        return ClusterFunction(SINE_BETA_1, 1, _sine1, OSCILLATORY,
                tail_coefficient=1.0 / math.pi ** 2, tail_bound=1.0,
                absolutely_convergent_form=TransformedForm(_sine1_mass, _sine1_log_moment),
                name='sine(beta=1)')
    if beta == 2:
        return ClusterFunction(SINE_BETA_2, 1, _sine2, INVERSE_SQUARE,
                tail_coefficient=1.0 / (2.0 * math.pi ** 2), tail_bound=1.0 / math.pi ** 2,
                name='sine(beta=2)')
    if beta == 4:
        return ClusterFunction(SINE_BETA_4, 1, _sine4, OSCILLATORY,
                tail_coefficient=1.0 / (4.0 * math.pi ** 2), tail_bound=1.0,
                absolutely_convergent_form=TransformedForm(_sine4_mass, _sine4_log_moment),
                name='sine(beta=4)')
    raise ValueError('Unsupported beta for the sine process: %s (expected 1, 2 or 4)' % beta)


def ginibre_cluster_function():
    """T2(v) = exp(-pi |v|^2), the infinite Ginibre process."""
    return ClusterFunction(GINIBRE, 2, lambda r: np.exp(-math.pi * r * r), EXPONENTIAL,
            tail_bound=1.0, name='ginibre')


def gaf_h(x):
    """
    h(x) = 1 + (1/2) d^2/dx^2 (x^2 (coth x - 1)), so that T2 = 1 - h(pi |v|^2 / 2).

    For x below 1e-2 the Taylor series x - 2x^3/9 + 2x^5/45 - 4x^7/525 is used.
    """
    x = np.asarray(x, dtype=float)
    small = x < _GAF_SERIES_LIMIT
    xs = np.where(small, 1.0, x)
    e = np.exp(-2.0 * xs)
    one_minus_e = -np.expm1(-2.0 * xs)
    coth_minus_one = 2.0 * e / one_minus_e
    csch2 = 4.0 * e / one_minus_e ** 2
    coth = (1.0 + e) / one_minus_e
    one_minus_h = -coth_minus_one + 2.0 * xs * csch2 - xs * xs * csch2 * coth
    x2 = x * x
    series = x * (1.0 - x2 * (2.0 / 9.0 - x2 * (2.0 / 45.0 - x2 * 4.0 / 525.0)))
    return np.where(small, series, 1.0 - one_minus_h)


def gaf_cluster_function():
    """T2(v) = 1 - h(pi |v|^2 / 2) for the zeros of the planar Gaussian analytic function."""
    return ClusterFunction(GAF, 2, lambda r: 1.0 - gaf_h(0.5 * math.pi * r * r), EXPONENTIAL,
            tail_bound=1.0, name='gaf')


def poisson_cluster_function(dimension=1):
    """The Poisson process has no correlations: T2 = 0, so its mass is 0."""
    return ClusterFunction(CUSTOM, dimension, lambda r: np.zeros_like(np.asarray(r, dtype=float)),
            EXPONENTIAL, name='poisson')


def custom_cluster_function(evaluator, dimension, tail_class,
        tail_coefficient=0.0, tail_bound=0.0, name='custom'):
    """Wrap a user supplied radial T2."""
    return ClusterFunction(CUSTOM, dimension, evaluator, tail_class,
            tail_coefficient=tail_coefficient, tail_bound=tail_bound, name=name)


def load_custom_cluster_function(csv_file, dimension, tail_class, tail_bound,
        tail_coefficient=0.0):
    """
    Build a cluster function from a sampled table ``v, t2``.

    Values of |v| inside the table are interpolated by a cubic spline. Beyond
    the last sample the declared tail is used: ``tail_coefficient / v^2`` for
    InverseSquare and 0 for Exponential.

    Args:
        csv_file(str): CSV with columns ``v`` and ``t2`` (or the first two columns).
        dimension(int): 1 or 2.
        tail_class(str): InverseSquare or Exponential.
        tail_bound(float): the declared tail majorant, required.
        tail_coefficient(float): mean tail coefficient for InverseSquare.
    """
    if tail_class not in (INVERSE_SQUARE, EXPONENTIAL):
        raise ValueError('Unsupported tail class for tabulated cluster functions: %s' % tail_class)
    if tail_bound is None:
        raise ValueError('tabulated cluster functions need a declared tail_bound')
    df = pd.read_csv(csv_file)
    if 'v' in df.columns and 't2' in df.columns:
        v, t2 = df['v'].values, df['t2'].values
    else:
        v, t2 = df.iloc[:, 0].values, df.iloc[:, 1].values
    order = np.argsort(np.abs(v), kind='mergesort')
    r = np.abs(v.astype(float))[order]
    t2 = t2.astype(float)[order]
    r, unique_idx = np.unique(r, return_index=True)
    t2 = t2[unique_idx]
    assert len(r) >= 4, "a tabulated cluster function needs at least 4 samples."
    spline = CubicSpline(r, t2)
    r_max = r[-1]

    def _evaluator(x):
        x = np.asarray(x, dtype=float)
        inside = x <= r_max
        if tail_class == INVERSE_SQUARE:
            outside = tail_coefficient / np.maximum(x, r_max) ** 2
        else:
            outside = np.zeros_like(x)
        return np.where(inside, spline(np.minimum(x, r_max)), outside)

    logger.info('loaded tabulated cluster function from {} ({} samples, |v| <= {})'.format(
            csv_file, len(r), r_max))
    return ClusterFunction(CUSTOM, dimension, _evaluator, tail_class,
            tail_coefficient=tail_coefficient, tail_bound=tail_bound, name='table:%s' % csv_file)


def _composite(components, dimension, name):
    tail_class = EXPONENTIAL
    for _, _, cf in components:
        if cf.tail_class == OSCILLATORY:
            tail_class = OSCILLATORY
        elif cf.tail_class == INVERSE_SQUARE and tail_class == EXPONENTIAL:
            tail_class = INVERSE_SQUARE
    coefficient = sum(w * s * s * cf.tail_coefficient for w, s, cf in components)

    def _evaluator(r):
        r = np.asarray(r, dtype=float)
        return sum(w * cf.evaluator(r / s) for w, s, cf in components)

    return ClusterFunction(CUSTOM, dimension, _evaluator, tail_class,
            tail_coefficient=coefficient,
            tail_bound=sum(w * cf.tail_bound for w, _, cf in components),
            components=components, name=name)


def superpose(cfs, M):
    """
    Cluster function of the union of M independent processes, rescaled to
    density one: T2(v) = (1/M^2) sum_i T2_i(v / M).

    Raises:
        ValueError: when M differs from len(cfs) or a component is not 1D.
    """
    if int(M) != len(cfs) or M < 1:
        raise ValueError('superpose expects M = len(cfs), got M=%s for %d components' % (M, len(cfs)))
    for cf in cfs:
        if cf.dimension != 1:
            raise ValueError('dimension mismatch: superpose is defined for 1D processes, got %r' % cf)
    weight = 1.0 / (M * M)
    components = [(weight, float(M), cf) for cf in cfs]
    return _composite(components, 1, 'superpose(%s)' % ', '.join(cf.name for cf in cfs))


def random_decimation(cf):
    """
    Erase each point independently with probability 1/2 and rescale to density
    one: T2'(v) = T2(2v), whose mass is half the original.
    """
    if cf.dimension != 1:
        raise ValueError('dimension mismatch: random_decimation is defined for 1D processes')
    return _composite([(1.0, 0.5, cf)], 1, 'random_decimation(%s)' % cf.name)
