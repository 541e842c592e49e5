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
| Integrals behind the sine-beta expectation limits.

The beta = 1 and beta = 4 cluster functions decay only like cos(v)/v, so their
log-weighted integrals are never taken in raw form. After integration by parts
they split into absolutely convergent quadratures of sinc^2 against log, one
transformed Si/si integral each, and classical closed forms.
"""

import math
from functools import lru_cache

import numpy as np

from renergy.utils.specfun import (EULER_GAMMA, LOG_2, sine_integral_si_big,
        sine_integral_si_small)
from renergy.utils.quadrature import adaptive_gauss, log_weighted

__all__ = [
    'DIRICHLET_INTEGRAL',
    'DIRICHLET_LOG_INTEGRAL',
    'sinc',
    'sinc_derivative',
    'sinc_square_integrals',
    'beta1_cross_term',
    'beta1_dirichlet_term',
    'beta4_boundary_term',
]

# int_0^inf sin(v)/v dv
DIRICHLET_INTEGRAL = 0.5 * math.pi
# int_0^inf sin(v) log(v) / v dv
DIRICHLET_LOG_INTEGRAL = -0.5 * math.pi * EULER_GAMMA

SINC_CUTOFF = 1e4
TRANSFORM_PERIODS = 256
_TOL = 1e-11


def sinc(v):
    """sin(pi v) / (pi v), with sinc(0) = 1."""
    return np.sinc(v)


def sinc_derivative(v):
    """d/dv sinc(v) = (cos(pi v) - sinc(v)) / v, by its Taylor series near 0."""
    v = np.asarray(v, dtype=float)
    small = np.abs(v) < 1e-3
    safe = np.where(small, 1.0, v)
    direct = (np.cos(np.pi * safe) - np.sinc(safe)) / safe
    series = -(np.pi ** 2 / 3.0) * v + (np.pi ** 4 / 30.0) * v ** 3
    return np.where(small, series, direct)


@lru_cache(maxsize=None)
def sinc_square_integrals(cutoff=SINC_CUTOFF):
    """
    Half-line integrals of sinc^2.

    Returns:
        (mass, mass_error, log_moment, log_error) for
        int_0^inf sinc^2(v) dv and int_0^inf log(v) sinc^2(v) dv.
        The tail beyond the integer ``cutoff`` uses the mean 1/(2 pi^2 v^2).
    """
    R = float(cutoff)
    func = lambda v: np.sinc(v) ** 2
    m_near, e1 = adaptive_gauss(func, 0.0, 1.0, tol=_TOL)
    m_far, e2 = adaptive_gauss(func, 1.0, R, tol=1e-9, panel_width=1.0)
    l_near, e3 = log_weighted(func, 0.0, 1.0)
    l_far, e4 = adaptive_gauss(lambda v: np.log(v) * func(v), 1.0, R, tol=1e-9, panel_width=1.0)
    coef = 1.0 / (2.0 * math.pi ** 2)
    mass = m_near + m_far + coef / R
    log_moment = l_near + l_far + coef * (math.log(R) + 1.0) / R
    remainder = (math.log(R) + 1.0) / (math.pi ** 3 * R * R)
    return mass, e1 + e2 + remainder, log_moment, e3 + e4 + remainder


@lru_cache(maxsize=None)
def beta1_cross_term(periods=TRANSFORM_PERIODS):
    """
    (2/pi) int_0^inf (sin(u)/u - 1) si(u) du / u, which vanishes.

    Integrated up to U = 2 pi ``periods``; the neglected tail is O(U^-3).

    Returns:
        (value, error)
    """
    U = 2.0 * math.pi * periods

    def _integrand(u):
        return (np.sin(u) / u - 1.0) * sine_integral_si_small(u) / u

    value, err = adaptive_gauss(_integrand, 0.0, U, tol=1e-10, panel_width=0.25 * math.pi)
    return 2.0 / math.pi * value, 2.0 / math.pi * (err + 4.0 / U ** 3)


def beta1_dirichlet_term():
    """
    -(2/pi) int_0^inf log(2 pi v) sin(pi v) / v dv = gamma - log 2, from the
    Dirichlet integral and its log-weighted companion.
    """
    return -2.0 / math.pi * (LOG_2 * DIRICHLET_INTEGRAL + DIRICHLET_LOG_INTEGRAL)


@lru_cache(maxsize=None)
def beta4_boundary_term(periods=TRANSFORM_PERIODS):
    """
    (1/pi) int_0^inf Si(u) sin(u) / u^2 du, equal to 1/2.

    The tail beyond U = 2 pi ``periods`` is (pi/2) int_U^inf sin(u)/u^2 du
    ~ pi / (2 U^2) up to O(U^-3).

    Returns:
        (value, error)
    """
    U = 2.0 * math.pi * periods

    def _integrand(u):
        return sine_integral_si_big(u) / u * (np.sin(u) / u)

    value, err = adaptive_gauss(_integrand, 0.0, U, tol=1e-10, panel_width=0.25 * math.pi)
    value = value + 0.5 * math.pi / U ** 2
    return value / math.pi, (err + 2.0 / U ** 3) / math.pi
