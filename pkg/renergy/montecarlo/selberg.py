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
| Exact finite-n cumulants of the energy of the circular beta-ensemble.

With Z(beta) = Gamma(1 + beta n / 2) / Gamma(1 + beta / 2)^n the cumulant
generating function of W_n is

    K(s) = s log n + log Z(beta - 2 s / n) - log Z(beta),

so the mean and variance are its first two derivatives at s = 0.
"""

import math

from renergy.utils.specfun import digamma, trigamma, log_gamma
from renergy.utils.quadrature import richardson_extrapolate

__all__ = [
    'selberg_log_partition',
    'selberg_cumulant_generating',
    'selberg_mean',
    'selberg_variance',
    'selberg_cumulants_by_differences',
    'u_beta',
    'v_beta',
]


def _check(n, beta):
    assert int(n) == n and n >= 2, "n must be an integer >= 2."
    assert beta > 0, "beta must be positive."


def selberg_log_partition(n, beta):
    """log Z(beta) = log Gamma(1 + beta n / 2) - n log Gamma(1 + beta / 2)."""
    return log_gamma(1.0 + 0.5 * beta * n) - n * log_gamma(1.0 + 0.5 * beta)


def selberg_cumulant_generating(s, n, beta):
    """K(s) = log E exp(s W_n)."""
    return s * math.log(n) + selberg_log_partition(n, beta - 2.0 * s / n) \
            - selberg_log_partition(n, beta)


def selberg_mean(n, beta):
    """
    E W_n = log n - Psi(1 + beta n / 2) + Psi(1 + beta / 2).

    Example:
        .. code-block:: python

            selberg_mean(2, 2.0)    # log 2 - 1/2
    """
    _check(n, beta)
    return math.log(n) - digamma(1.0 + 0.5 * beta * n) + digamma(1.0 + 0.5 * beta)


def selberg_variance(n, beta):
    """Var W_n = Psi'(1 + beta n / 2) - Psi'(1 + beta / 2) / n."""
    _check(n, beta)
    return trigamma(1.0 + 0.5 * beta * n) - trigamma(1.0 + 0.5 * beta) / n


def selberg_cumulants_by_differences(n, beta, step=0.05, levels=3):
    """
    Mean and variance from central differences of ``selberg_cumulant_generating``
    at s = 0, Richardson-extrapolated over the steps step, step/2, ...

    Independent of the closed forms above; used to cross-check them.

    Returns:
        (mean, variance)
    """
    _check(n, beta)
    assert 2.0 * step / n < beta, "step too large for beta."
    k0 = selberg_cumulant_generating(0.0, n, beta)
    firsts, seconds = [], []
    for level in range(levels):
        h = step / 2.0 ** level
        k_plus = selberg_cumulant_generating(h, n, beta)
        k_minus = selberg_cumulant_generating(-h, n, beta)
        firsts.append((k_plus - k_minus) / (2.0 * h))
        seconds.append((k_plus - 2.0 * k0 + k_minus) / (h * h))
    return (richardson_extrapolate(firsts, first_order=2, order_step=2),
            richardson_extrapolate(seconds, first_order=2, order_step=2))


def u_beta(beta):
    """lim E W_n = Psi(1 + beta / 2) - log(beta / 2)."""
    assert beta > 0, "beta must be positive."
    return digamma(1.0 + 0.5 * beta) - math.log(0.5 * beta)


def v_beta(beta):
    """lim n Var W_n = 2 / beta - Psi'(1 + beta / 2)."""
    assert beta > 0, "beta must be positive."
    return 2.0 / beta - trigamma(1.0 + 0.5 * beta)
