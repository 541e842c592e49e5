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
| Quadrature rules: composite and adaptive Gauss-Legendre panels, a rule for
| integrands with a logarithmic or algebraic singularity at the left end
| point, piecewise QUADPACK integration and Richardson extrapolation.

Panel results are always combined in order of their left end point with
``math.fsum``, so a value does not depend on how panels were scheduled.
"""

import math
import logging
import numpy as np
from scipy import integrate

__all__ = [
    'gauss_legendre_rule',
    'panel_integrals',
    'composite_gauss',
    'adaptive_gauss',
    'log_weighted',
    'algebraic_weighted',
    'piecewise_quad',
    'richardson_extrapolate',
]

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 16
_CHUNK = 1 << 18
_RULES = {}


def gauss_legendre_rule(order):
    """Nodes and weights of the ``order``-point Gauss-Legendre rule on [-1, 1]."""
    if order not in _RULES:
        _RULES[order] = np.polynomial.legendre.leggauss(order)
    return _RULES[order]


def panel_integrals(func, lefts, rights, order=DEFAULT_ORDER):
    """
    Apply the Gauss rule on every panel ``[lefts[i], rights[i]]``.

    Args:
        func(callable): vectorized integrand, maps a 1D array to a 1D array.
        lefts(ndarray): left end points.
        rights(ndarray): right end points.
        order(int): number of Gauss nodes per panel.

    Returns:
        ndarray of per-panel integrals.
    """
    nodes, weights = gauss_legendre_rule(order)
    lefts = np.asarray(lefts, dtype=float)
    rights = np.asarray(rights, dtype=float)
    half = 0.5 * (rights - lefts)
    mid = 0.5 * (rights + lefts)
    out = np.empty(len(lefts))
    rows = max(1, _CHUNK // order)
    for start in range(0, len(lefts), rows):
        stop = start + rows
        x = mid[start:stop, None] + half[start:stop, None] * nodes[None, :]
        values = np.asarray(func(x.reshape(-1)), dtype=float).reshape(x.shape)
        out[start:stop] = half[start:stop] * values.dot(weights)
    return out


def composite_gauss(func, a, b, num_panels, order=DEFAULT_ORDER):
    """Non-adaptive composite Gauss rule on ``num_panels`` equal panels."""
    edges = np.linspace(a, b, int(num_panels) + 1)
    return math.fsum(panel_integrals(func, edges[:-1], edges[1:], order))


def adaptive_gauss(func, a, b, tol=1e-12, panel_width=None, order=DEFAULT_ORDER, max_levels=30):
    """
    Adaptive bisection with a local Gauss rule.

    The interval is first cut into panels of at most ``panel_width``. A panel is
    accepted when the rule on the panel and on its two halves agree within the
    panel's share of ``tol``; otherwise both halves are refined further.

    Args:
        func(callable): vectorized integrand.
        a(float): lower limit.
        b(float): upper limit.
        tol(float): absolute tolerance for the whole interval.
        panel_width(float): initial panel width, None for a single panel.
        order(int): Gauss nodes per panel.
        max_levels(int): maximum number of bisection rounds.

    Returns:
        (value, error) where error is the sum of accepted local error estimates.
    """
    if b <= a:
        return 0.0, 0.0
    num = 1 if panel_width is None else max(1, int(math.ceil((b - a) / panel_width)))
    edges = np.linspace(a, b, num + 1)
    lefts, rights = edges[:-1], edges[1:]
    whole = panel_integrals(func, lefts, rights, order)
    pending_err = np.full(len(lefts), np.inf)
    acc_lefts, acc_values, acc_errors = [], [], []
    for _ in range(max_levels):
        mids = 0.5 * (lefts + rights)
        first = panel_integrals(func, lefts, mids, order)
        second = panel_integrals(func, mids, rights, order)
        refined = first + second
        err = np.abs(refined - whole)
        local_tol = np.maximum(tol * (rights - lefts) / (b - a),
                4.0 * np.finfo(float).eps * np.abs(refined))
        done = err <= local_tol
        acc_lefts.append(lefts[done])
        acc_values.append(refined[done])
        acc_errors.append(err[done])
        keep = ~done
        if not np.any(keep):
            lefts = lefts[keep]
            break
        new_lefts = np.concatenate([lefts[keep], mids[keep]])
        rights = np.concatenate([mids[keep], rights[keep]])
        lefts = new_lefts
        whole = np.concatenate([first[keep], second[keep]])
        pending_err = np.concatenate([err[keep], err[keep]]) * 0.5
    if len(lefts) > 0:
        logger.warning('adaptive_gauss on [{}, {}]: {} panels unresolved after {} levels'.format(
                a, b, len(lefts), max_levels))
        acc_lefts.append(lefts)
        acc_values.append(whole)
        acc_errors.append(pending_err)
    all_lefts = np.concatenate(acc_lefts)
    all_values = np.concatenate(acc_values)
    all_errors = np.concatenate(acc_errors)
    order_idx = np.argsort(all_lefts, kind='mergesort')
    return math.fsum(all_values[order_idx]), math.fsum(all_errors[order_idx])


def _pointwise(func):
    """Scalar view of a vectorized integrand, as QUADPACK calls it."""
    return lambda t: float(np.asarray(func(np.array([t], dtype=float)), dtype=float)[0])


def log_weighted(func, a, b, tol=1e-13):
    """
    int_a^b log(x - a) g(x) dx for a smooth ``g``.

    Uses the QUADPACK algebraic-logarithmic weight (``weight='alg-loga'``), which
    integrates the singular factor exactly.

    Returns:
        (value, error)
    """
    value, error = integrate.quad(_pointwise(func), a, b, weight='alg-loga', wvar=(0.0, 0.0),
            epsabs=tol, epsrel=tol, limit=200)
    return value, error


def algebraic_weighted(func, a, b, exponent, tol=1e-13):
    """
    int_a^b (x - a)^exponent g(x) dx for a smooth ``g`` and exponent > -1,
    with the QUADPACK algebraic weight (``weight='alg'``).

    Returns:
        (value, error)
    """
    assert exponent > -1.0, "exponent must be greater than -1."
    value, error = integrate.quad(_pointwise(func), a, b, weight='alg', wvar=(exponent, 0.0),
            epsabs=tol, epsrel=tol, limit=200)
    return value, error


def piecewise_quad(func, breakpoints, tol=1e-13):
    """
    int over [breakpoints[0], breakpoints[-1]] of a function that is smooth
    between consecutive breakpoints, one QUADPACK call per piece.

    Returns:
        (value, error) with the error bounds of the pieces summed.
    """
    scalar = _pointwise(func)
    values, errors = [], []
    for lo, hi in zip(breakpoints[:-1], breakpoints[1:]):
        if hi <= lo:
            continue
        value, error = integrate.quad(scalar, lo, hi, epsabs=tol, epsrel=tol, limit=200)
        values.append(value)
        errors.append(error)
    return math.fsum(values), math.fsum(errors)


def richardson_extrapolate(values, ratio=2.0, first_order=1, order_step=1):
    """
    Richardson extrapolation of ``values`` taken at steps h, h/ratio, h/ratio^2, ...
    assuming an error expansion c_1 h^p + c_2 h^{p+q} + c_3 h^{p+2q} + ... with
    p = ``first_order`` and q = ``order_step`` (2 for central differences).

    Example:
        .. code-block:: python

            richardson_extrapolate([I(0.1), I(0.05), I(0.025)])
    """
    table = [float(v) for v in values]
    assert len(table) >= 1, "values must not be empty."
    power = first_order
    while len(table) > 1:
        factor = ratio ** power
        table = [(factor * table[i + 1] - table[i]) / (factor - 1.0) for i in range(len(table) - 1)]
        power += order_step
    return table[0]
