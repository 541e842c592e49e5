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
| Special functions used across renergy: the Gamma family, exponential and
| sine integrals, Bessel J1, the Dedekind eta value at i and the log-sine kernel.

All functions accept a scalar or a numpy array and return a python float for
scalar input.
"""

import math
import numpy as np

from renergy.utils.errors import DomainError, SingularityError

__all__ = [
    'EULER_GAMMA',
    'LOG_2',
    'LOG_PI',
    'LOG_2PI',
    'Accuracy',
    'digamma',
    'trigamma',
    'log_gamma',
    'exp_integral_ei',
    'sine_integral_si_big',
    'sine_integral_si_small',
    'bessel_j1',
    'dedekind_eta_at_i',
    'log_2sin',
]


EULER_GAMMA = 0.57721566490153286060651209008240243
LOG_2 = 0.69314718055994530941723212145817657
LOG_PI = 1.14472988584940017414342735135305871
LOG_2PI = 1.83787706640934548356065947281123527
HALF_PI = 1.57079632679489661923132169163975144

_ASYMPTOTIC_THRESHOLD = 10.0
_FPMIN = 1e-300
_EPS = 1e-16

# Bernoulli coefficients B_2k / (2k) for the digamma expansion.
_DIGAMMA_COEFS = [1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
        1.0 / 132, -691.0 / 32760, 1.0 / 12]
# B_2k, for the trigamma expansion.
_TRIGAMMA_COEFS = [1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
        5.0 / 66, -691.0 / 2730, 7.0 / 6]
# B_2k / (2k (2k - 1)), Stirling series.
_STIRLING_COEFS = [1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
        1.0 / 1188, -691.0 / 360360, 1.0 / 156]

_SI_SERIES_LIMIT = 4.0
_EI_SERIES_LIMIT = 40.0
_J1_TRAPEZOID_LIMIT = 25.0
_J1_NODES = 128
_J1_CHUNK = 4096
_J1_HANKEL_TERMS = 24


class Accuracy(object):
    """
    Convergence controls for the series and continued fractions in this module.

    Args:
        abs_tol(float): absolute tolerance of a single series term.
        rel_tol(float): tolerance of a term relative to the partial sum.
        max_terms(int): hard cap on the number of terms or iterations.
    """
    def __init__(self, abs_tol=1e-300, rel_tol=1e-16, max_terms=500):
        super(Accuracy, self).__init__()
        assert abs_tol > 0, "abs_tol must be positive."
        assert rel_tol > 0, "rel_tol must be positive."
        assert int(max_terms) >= 1, "max_terms must be at least 1."
        self.abs_tol = float(abs_tol)
        self.rel_tol = float(rel_tol)
        self.max_terms = int(max_terms)

    def converged(self, term, total):
        """Elementwise test ``|term| <= max(abs_tol, rel_tol * |total|)``."""
        return np.all(np.abs(term) <= np.maximum(self.abs_tol, self.rel_tol * np.abs(total)))

    @classmethod
    def from_dict(cls, config):
        return cls(**config)

    def to_dict(self):
        return {'abs_tol': self.abs_tol, 'rel_tol': self.rel_tol, 'max_terms': self.max_terms}


DEFAULT_ACCURACY = Accuracy()


def _prepare(x):
    arr = np.array(x, dtype=float)
    return arr.reshape(-1), arr.shape, arr.ndim == 0


def _finish(flat, shape, scalar):
    if scalar:
        return float(flat[0])
    return flat.reshape(shape)


def _check_positive(flat, name):
    if np.any(~(flat > 0)):
        bad = flat[~(flat > 0)][0]
        raise DomainError('%s is defined for x > 0 only, got %r' % (name, bad))


def _shift_up(flat, on_shift):
    """Apply ``x -> x + 1`` until every entry reaches the asymptotic threshold."""
    x = flat.copy()
    while True:
        shift = x < _ASYMPTOTIC_THRESHOLD
        if not np.any(shift):
            return x
        on_shift(shift, x)
        x[shift] += 1.0


def digamma(x):
    """
    Psi(x) = Gamma'(x) / Gamma(x) for x > 0.

    The argument is moved above 10 with Psi(x) = Psi(x + 1) - 1/x, then the
    asymptotic Bernoulli expansion is summed up to B_14, which keeps the
    truncation error below 1e-15.

    Args:
        x(float|ndarray): positive argument.

    Returns:
        Psi(x).
    """
    flat, shape, scalar = _prepare(x)
    _check_positive(flat, 'digamma')
    result = np.zeros_like(flat)

    def _on_shift(mask, cur):
        result[mask] -= 1.0 / cur[mask]

    z = _shift_up(flat, _on_shift)
    inv2 = 1.0 / (z * z)
    power = inv2.copy()
    series = np.zeros_like(z)
    for coef in _DIGAMMA_COEFS:
        series += coef * power
        power *= inv2
    result += np.log(z) - 0.5 / z - series
    return _finish(result, shape, scalar)


def trigamma(x):
    """
    Psi'(x) for x > 0, by recurrence and asymptotic series.
    """
    flat, shape, scalar = _prepare(x)
    _check_positive(flat, 'trigamma')
    result = np.zeros_like(flat)

    def _on_shift(mask, cur):
        result[mask] += 1.0 / (cur[mask] * cur[mask])

    z = _shift_up(flat, _on_shift)
    inv = 1.0 / z
    inv2 = inv * inv
    power = inv2 * inv
    series = np.zeros_like(z)
    for coef in _TRIGAMMA_COEFS:
        series += coef * power
        power *= inv2
    result += inv + 0.5 * inv2 + series
    return _finish(result, shape, scalar)


def log_gamma(x):
    """
    log Gamma(x) for x > 0.

    Stirling series above 10; below, the shift product is accumulated and its
    logarithm taken once.
    """
    flat, shape, scalar = _prepare(x)
    _check_positive(flat, 'log_gamma')
    product = np.ones_like(flat)

    def _on_shift(mask, cur):
        product[mask] *= cur[mask]

    z = _shift_up(flat, _on_shift)
    inv = 1.0 / z
    inv2 = inv * inv
    power = inv.copy()
    series = np.zeros_like(z)
    for coef in _STIRLING_COEFS:
        series += coef * power
        power *= inv2
    result = (z - 0.5) * np.log(z) - z + 0.5 * LOG_2PI + series - np.log(product)
    return _finish(result, shape, scalar)


def _ei_series(x, accuracy):
    # gamma + log|x| + sum x^n / (n n!)
    term = np.ones_like(x)
    total = np.zeros_like(x)
    for n in range(1, accuracy.max_terms + 1):
        term = term * x / n
        contrib = term / n
        total += contrib
        if accuracy.converged(contrib, total):
            break
    return EULER_GAMMA + np.log(np.abs(x)) + total


def _ei_asymptotic(x, accuracy):
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, accuracy.max_terms + 1):
        next_term = term * k / x
        if np.all(np.abs(next_term) >= np.abs(term)):
            break
        term = next_term
        total += term
        if accuracy.converged(term, total):
            break
    return np.exp(x) / x * total


def _e1_continued_fraction(z, accuracy):
    """E1(z) for real z >= 1 (modified Lentz)."""
    b = z + 1.0
    c = np.full_like(z, 1.0 / _FPMIN)
    d = 1.0 / b
    h = d.copy()
    for i in range(1, accuracy.max_terms + 1):
        a = -float(i * i)
        b = b + 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if np.all(np.abs(delta - 1.0) < _EPS):
            break
    return h * np.exp(-z)


def exp_integral_ei(x, accuracy=None):
    """
    Exponential integral Ei(x) = PV int_{-inf}^x e^t / t dt, x != 0.

    Power series for -1 <= x <= 40, asymptotic series above 40 and
    Ei(x) = -E1(-x) by continued fraction below -1.

    Args:
        x(float|ndarray): nonzero argument.
        accuracy(Accuracy): series controls, defaults to ``DEFAULT_ACCURACY``.
    """
    accuracy = accuracy or DEFAULT_ACCURACY
    flat, shape, scalar = _prepare(x)
    if np.any(flat == 0) or np.any(np.isnan(flat)):
        raise DomainError('exp_integral_ei has a logarithmic singularity at x = 0')
    result = np.empty_like(flat)
    series = (flat >= -1.0) & (flat <= _EI_SERIES_LIMIT)
    large = flat > _EI_SERIES_LIMIT
    negative = flat < -1.0
    if np.any(series):
        result[series] = _ei_series(flat[series], accuracy)
    if np.any(large):
        result[large] = _ei_asymptotic(flat[large], accuracy)
    if np.any(negative):
        result[negative] = -_e1_continued_fraction(-flat[negative], accuracy)
    return _finish(result, shape, scalar)


def _si_series(x, accuracy):
    x2 = x * x
    term = x.copy()
    total = x.copy()
    for k in range(1, accuracy.max_terms + 1):
        term = -term * x2 / ((2 * k) * (2 * k + 1))
        contrib = term / (2 * k + 1)
        total += contrib
        if accuracy.converged(contrib, total):
            break
    return total


def _e1_imaginary(x, accuracy):
    """E1(i x) for x > 0; the imaginary part is si(x) and the real part -Ci(x)."""
    b = 1.0 + 1j * x
    c = np.full(x.shape, 1.0 / _FPMIN, dtype=complex)
    d = 1.0 / b
    h = d.copy()
    for i in range(1, accuracy.max_terms + 1):
        a = -float(i * i)
        b = b + 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if np.all(np.abs(delta - 1.0) < _EPS):
            break
    return h * (np.cos(x) - 1j * np.sin(x))


def _si_positive(ax, accuracy):
    """Return (Si, si) for nonnegative arguments."""
    big = np.empty_like(ax)
    small = np.empty_like(ax)
    near = ax <= _SI_SERIES_LIMIT
    if np.any(near):
        big[near] = _si_series(ax[near], accuracy)
        small[near] = big[near] - HALF_PI
    far = ~near
    if np.any(far):
        small[far] = _e1_imaginary(ax[far], accuracy).imag
        big[far] = small[far] + HALF_PI
    return big, small


def sine_integral_si_big(x, accuracy=None):
    """
    Si(x) = int_0^x sin t / t dt. Odd, tends to pi/2.

    Example:
        .. code-block:: python

            sine_integral_si_big(np.pi)     # 1.851937051982466
    """
    accuracy = accuracy or DEFAULT_ACCURACY
    flat, shape, scalar = _prepare(x)
    big, _ = _si_positive(np.abs(flat), accuracy)
    return _finish(np.sign(flat) * big, shape, scalar)


def sine_integral_si_small(x, accuracy=None):
    """
    si(x) = Si(x) - pi/2. For large positive x it is computed without
    cancellation, |si(x)| <= 2/x.
    """
    accuracy = accuracy or DEFAULT_ACCURACY
    flat, shape, scalar = _prepare(x)
    big, small = _si_positive(np.abs(flat), accuracy)
    result = np.where(flat >= 0, small, -big - HALF_PI)
    return _finish(result, shape, scalar)


def _j1_trapezoid(x):
    # J1(x) = 1/(2 pi) int_0^{2 pi} cos(t - x sin t) dt, periodic trapezoid
    tau = 2.0 * np.pi * np.arange(_J1_NODES) / _J1_NODES
    sin_tau = np.sin(tau)
    out = np.empty_like(x)
    for start in range(0, len(x), _J1_CHUNK):
        part = x[start: start + _J1_CHUNK]
        out[start: start + _J1_CHUNK] = np.cos(
                tau[None, :] - part[:, None] * sin_tau[None, :]).mean(axis=1)
    return out


def _j1_hankel(x):
    mu = 4.0
    chi = x - 0.75 * np.pi
    p = np.ones_like(x)
    q = np.zeros_like(x)
    a = np.ones_like(x)
    for k in range(1, _J1_HANKEL_TERMS + 1):
        a = a * (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if k % 2 == 1:
            q += (-1) ** ((k - 1) // 2) * a
        else:
            p += (-1) ** (k // 2) * a
    return np.sqrt(2.0 / (np.pi * x)) * (p * np.cos(chi) - q * np.sin(chi))


def bessel_j1(x):
    """
    Bessel function of the first kind J1(x).

    Trapezoid rule on the Bessel integral (128 nodes, exact to rounding for
    |x| <= 25) and the Hankel expansion beyond.
    """
    flat, shape, scalar = _prepare(x)
    ax = np.abs(flat)
    out = np.empty_like(ax)
    near = ax <= _J1_TRAPEZOID_LIMIT
    if np.any(near):
        out[near] = _j1_trapezoid(ax[near])
    if np.any(~near):
        out[~near] = _j1_hankel(ax[~near])
    return _finish(np.sign(flat) * out, shape, scalar)


def dedekind_eta_at_i(terms=10):
    """
    eta(i) = q^{1/24} prod_{k>=1} (1 - q^k), q = exp(-2 pi), truncated after
    ``terms`` factors. Ten factors leave an error below 1e-25.
    """
    assert int(terms) >= 1, "terms must be at least 1."
    k = np.arange(1, int(terms) + 1, dtype=float)
    log_eta = -np.pi / 12.0 + math.fsum(np.log1p(-np.exp(-2.0 * np.pi * k)))
    return math.exp(log_eta)


def log_2sin(x, N):
    """
    log|2 sin(pi x / N)|, the negative of the 1D torus Green function.

    Args:
        x(float|ndarray): displacement, reduced mod N internally.
        N(float): the torus length.

    Returns:
        the kernel value.
    """
    assert N > 0, "N must be positive."
    flat, shape, scalar = _prepare(x)
    r = np.mod(flat, N)
    r = np.minimum(r, N - r)
    if np.any(r <= 0):
        raise SingularityError('log_2sin is singular at x = 0 mod N (N=%r)' % N)
    return _finish(LOG_2 + np.log(np.sin(np.pi * r / N)), shape, scalar)
