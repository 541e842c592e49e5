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
| Limits of the expected renormalized energy for stationary processes given
| by their cluster function.

For a density-one process with cluster function T2 the limit is finite exactly
when the mass int T2 equals 1, and then it is
``log(2 pi) + int log|v| T2(v) dv`` on the line or ``int log|v| T2(v) dv`` in
the plane.
"""

import math
import logging
import numpy as np

from renergy.utils.errors import DomainError, QuadratureError
from renergy.utils.specfun import LOG_2PI
from renergy.utils.quadrature import adaptive_gauss, log_weighted
from renergy.processes.cluster_functions import (INVERSE_SQUARE,
        superpose, sine_beta_cluster_function)

__all__ = [
    'FINITE',
    'DIVERGENT',
    'MASS_TOLERANCE',
    'ExpectationLimit',
    't2_eval',
    't2_mass',
    't2_log_moment',
    'expectation_limit_1d',
    'expectation_limit_2d',
    'discrete_sine_expectation',
    'deterministic_decimation_limit',
]

logger = logging.getLogger(__name__)

FINITE = 'Finite'
DIVERGENT = 'Divergent'

MASS_TOLERANCE = 1e-4
QUADRATURE_TOLERANCE = 1e-6

INVERSE_SQUARE_CUTOFF = 1e4
EXPONENTIAL_CUTOFF = 10.0
_FAR_TOL = 1e-9

DISCRETE_SINE_TERMS = 1 << 20
_SERIES_CHUNK = 1 << 16


class ExpectationLimit(object):
    """
    Result of an expectation-limit computation.

    Args:
        status(str): FINITE or DIVERGENT.
        value(float): the limit, None when divergent.
        mass(float): int T2.
        mass_error(float): error bound of the mass.
        quadrature_error(float): error bound of the log moment.
    """
    def __init__(self, status, value, mass, mass_error, quadrature_error):
        super(ExpectationLimit, self).__init__()
        if status not in (FINITE, DIVERGENT):
            raise ValueError('Unsupported status: %s' % status)
        if status == FINITE:
            assert abs(mass - 1.0) <= MASS_TOLERANCE, \
                    "a finite limit requires unit mass, got %s" % mass
        self.status = status
        self.value = None if status == DIVERGENT else float(value)
        self.mass = float(mass)
        self.mass_error = float(mass_error)
        self.quadrature_error = float(quadrature_error)

    @property
    def is_finite(self):
        return self.status == FINITE

    def to_dict(self):
        return {
            'status': self.status,
            'value': self.value,
            'mass': self.mass,
            'mass_error': self.mass_error,
            'quadrature_error': self.quadrature_error,
        }

    def __repr__(self):
        if self.is_finite:
            return 'ExpectationLimit(Finite(%.12g), mass=%.12g)' % (self.value, self.mass)
        return 'ExpectationLimit(Divergent, mass=%.12g)' % self.mass


def t2_eval(cf, v):
    """Value of the cluster function at displacement ``v``."""
    return cf(v)


def _radial_weight(dimension):
    if dimension == 1:
        return lambda r: 2.0 * np.ones_like(r)
    return lambda r: 2.0 * math.pi * r


def _direct_moments(cf):
    """(mass, mass_error, log_moment, log_error) by radial quadrature."""
    weight = _radial_weight(cf.dimension)
    func = lambda r: weight(r) * cf.evaluator(r)
    if cf.tail_class == INVERSE_SQUARE:
        if cf.dimension != 1:
            raise ValueError('InverseSquare tails are not integrable in dimension %d' % cf.dimension)
        R = INVERSE_SQUARE_CUTOFF
        panel_width = 1.0
    else:
        R = EXPONENTIAL_CUTOFF
        panel_width = 0.5
    m_near, e1 = adaptive_gauss(func, 0.0, 1.0, tol=1e-12)
    l_near, e2 = log_weighted(func, 0.0, 1.0)
    m_far, e3 = adaptive_gauss(func, 1.0, R, tol=_FAR_TOL, panel_width=panel_width)
    l_far, e4 = adaptive_gauss(lambda r: np.log(r) * func(r), 1.0, R,
            tol=_FAR_TOL, panel_width=panel_width)
    if cf.tail_class == INVERSE_SQUARE:
        a = cf.tail_coefficient
        log_r = math.log(R)
        mass_tail = 2.0 * a / R
        log_tail = 2.0 * a * (log_r + 1.0) / R
        tail_error = 2.0 * cf.tail_bound * (log_r + 1.0) / R ** 2
    else:
        # |T2(r)| <= tail_bound * exp(-r^2) beyond the cutoff
        mass_tail = log_tail = 0.0
        tail_error = cf.tail_bound * 2.0 * math.pi * R ** cf.dimension * \
                (math.log(R) + 1.0) * math.exp(-R * R)
    logger.debug('{}: {} tail cut at {}'.format(cf.name, cf.tail_class, R))
    return (m_near + m_far + mass_tail, e1 + e3 + tail_error,
            l_near + l_far + log_tail, e2 + e4 + tail_error)


def _moments(cf):
    cached = getattr(cf, '_moments', None)
    if cached is not None:
        return cached
    if cf.components:
        mass = mass_err = log_moment = log_err = 0.0
        for w, s, comp in cf.components:
            m, me, l, le = _moments(comp)
            factor = w * s ** cf.dimension
            mass += factor * m
            mass_err += abs(factor) * me
            log_moment += factor * (l + math.log(s) * m)
            log_err += abs(factor) * (le + abs(math.log(s)) * me)
        result = (mass, mass_err, log_moment, log_err)
    elif cf.absolutely_convergent_form is not None:
        mass, mass_err = cf.absolutely_convergent_form.mass()
        log_moment, log_err = cf.absolutely_convergent_form.log_moment()
        result = (mass, mass_err, log_moment, log_err)
    else:
        result = _direct_moments(cf)
    cf._moments = result
    return result


def _check_error(cf, what, error):
    if error > QUADRATURE_TOLERANCE:
        raise QuadratureError('%s of %s: error bound %.3g exceeds %.3g'
                % (what, cf.name, error, QUADRATURE_TOLERANCE), error=error)


def t2_mass(cf):
    """
    int T2 over the line or the plane.

    Returns:
        (value, error_bound)

    Raises:
        QuadratureError: when the error bound exceeds 1e-6.
    """
    mass, mass_err, _, _ = _moments(cf)
    _check_error(cf, 'mass', mass_err)
    return mass, mass_err


def t2_log_moment(cf):
    """int log|v| T2(v) dv as (value, error_bound)."""
    _, _, log_moment, log_err = _moments(cf)
    _check_error(cf, 'log moment', log_err)
    return log_moment, log_err


def _limit(cf, offset):
    mass, mass_err = t2_mass(cf)
    if abs(mass - 1.0) > MASS_TOLERANCE:
        logger.info('{}: mass {} != 1, the expected energy diverges'.format(cf.name, mass))
        _, _, _, log_err = _moments(cf)
        return ExpectationLimit(DIVERGENT, None, mass, mass_err, log_err)
    log_moment, log_err = t2_log_moment(cf)
    return ExpectationLimit(FINITE, offset + log_moment, mass, mass_err, log_err)


def expectation_limit_1d(cf):
    """
    lim E W_N = log(2 pi) + int log|v| T2(v) dv for a process on the line.

    Example:
        .. code-block:: python

            expectation_limit_1d(sine_beta_cluster_function(2)).value   # 1 - gamma
    """
    if cf.dimension != 1:
        raise ValueError('expectation_limit_1d needs a 1D cluster function, got %r' % cf)
    return _limit(cf, LOG_2PI)


def expectation_limit_2d(cf):
    """lim E W_N = int log|v| T2(v) dv for a process in the plane."""
    if cf.dimension != 2:
        raise ValueError('expectation_limit_2d needs a 2D cluster function, got %r' % cf)
    return _limit(cf, 0.0)


def discrete_sine_expectation(rho, terms=DISCRETE_SINE_TERMS):
    """
    Limit of the expected energy for the discrete sine process of density rho,
    rescaled to density one:

        rho log rho + (2/rho) sum_{u>=1} (sin(rho pi u) / (pi u))^2 log(2 pi rho u)

    The first ``terms`` summands are added exactly; the rest is replaced by the
    integral of its mean 1/(2 pi^2 u^2) log(2 pi rho u).
    """
    rho = float(rho)
    if not 0.0 < rho <= 1.0:
        raise DomainError('discrete sine density must lie in (0, 1], got %s' % rho)
    if rho == 1.0:
        return 0.0
    partial = []
    for start in range(1, terms + 1, _SERIES_CHUNK):
        u = np.arange(start, min(start + _SERIES_CHUNK, terms + 1), dtype=float)
        s = np.sin(rho * math.pi * u) / (math.pi * u)
        partial.append(math.fsum(s * s * np.log(2.0 * math.pi * rho * u)))
    upper = terms + 0.5
    tail = (math.log(2.0 * math.pi * rho * upper) + 1.0) / (2.0 * math.pi ** 2 * upper)
    return rho * math.log(rho) + 2.0 / rho * (math.fsum(partial) + tail)


def deterministic_decimation_limit(beta, parent_limit=None):
    """
    Limit after keeping every other point of the parent process and rescaling.

    The sine(beta=2) process is the even-indexed half of the superposition of
    two sine(beta=1) processes, and sine(beta=4) the even-indexed half of
    sine(beta=1). Decimation shifts the limit by -1 and -1/2 respectively.

    Args:
        beta(int): 2 or 4, the decimated process.
        parent_limit(float): limit of the parent, computed by quadrature when None.
    """
    if beta == 2:
        if parent_limit is None:
            sine1 = sine_beta_cluster_function(1)
            parent_limit = expectation_limit_1d(superpose([sine1, sine1], 2)).value
        return parent_limit - 1.0
    if beta == 4:
        if parent_limit is None:
            parent_limit = expectation_limit_1d(sine_beta_cluster_function(1)).value
        return parent_limit - 0.5
    raise ValueError('Unsupported beta for deterministic decimation: %s' % beta)
