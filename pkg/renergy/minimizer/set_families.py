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
| Measure-one sets A whose indicator has a closed-form Fourier transform
| k_A, together with their autocorrelation f_A(w) = |A cap (A + w)|.
"""

import math
import numpy as np

from renergy.utils.specfun import bessel_j1

__all__ = [
    'INTERVAL_UNION',
    'DISK',
    'RECTANGLE',
    'ANNULUS',
    'SetFamily',
    'IntervalUnion',
    'Disk',
    'Rectangle',
    'Annulus',
    'lens_area',
]

INTERVAL_UNION = 'IntervalUnion'
DISK = 'Disk'
RECTANGLE = 'Rectangle'
ANNULUS = 'Annulus'

_EDGE_TOL = 1e-12


def _plane_coordinates(v):
    v = np.asarray(v)
    if np.iscomplexobj(v):
        return v.real, v.imag
    v = np.asarray(v, dtype=float)
    if v.ndim >= 1 and v.shape[-1] == 2:
        return v[..., 0], v[..., 1]
    raise TypeError('Invalid argument type: %s of %s' % (type(v), v))


def _scalar(value):
    return float(value) if np.ndim(value) == 0 else value


def lens_area(r1, r2, d):
    """Area of the intersection of two disks of radii r1, r2 at center distance d."""
    d = np.asarray(d, dtype=float)
    small, large = min(r1, r2), max(r1, r2)
    if small <= 0:
        return np.zeros_like(d)
    inside = d <= large - small
    apart = d >= large + small
    dd = np.where(inside | apart, 0.5 * (large - small + large + small), d)
    c1 = np.clip((dd * dd + r1 * r1 - r2 * r2) / (2.0 * dd * r1), -1.0, 1.0)
    c2 = np.clip((dd * dd + r2 * r2 - r1 * r1) / (2.0 * dd * r2), -1.0, 1.0)
    kite = (-dd + r1 + r2) * (dd + r1 - r2) * (dd - r1 + r2) * (dd + r1 + r2)
    partial = r1 * r1 * np.arccos(c1) + r2 * r2 * np.arccos(c2) - 0.5 * np.sqrt(np.maximum(kite, 0.0))
    return np.where(inside, math.pi * small * small, np.where(apart, 0.0, partial))


class SetFamily(object):
    """
    A symmetric set of measure 1.

    Attributes:
        dimension(int): 1 or 2.
        kind(str): family name.
        parameter(float): the family parameter (gap, aspect ratio, inner radius).
        measure(float): always 1.
    """
    dimension = None
    kind = None

    def __init__(self, parameter=0.0):
        super(SetFamily, self).__init__()
        self.parameter = float(parameter)
        self.measure = 1.0

    def k_transform(self, x):
        """k_A(x) = int_A exp(-2 i pi xi . x) d xi, real because A is symmetric."""
        raise NotImplementedError()

    def autocorrelation(self, w):
        """f_A(w) = |A cap (A + w)|."""
        raise NotImplementedError()

    def __repr__(self):
        return '%s(%g)' % (self.kind, self.parameter)


class IntervalUnion(SetFamily):
    """
    m = len(gaps) + 1 intervals of length 1/m separated by ``gaps``, centered at 0.

    Args:
        gaps(list): non-negative gap lengths, read left to right; must be a
            palindrome so the set is symmetric.

    Example:
        .. code-block:: python

            ball = IntervalUnion([])        # [-1/2, 1/2]
            pair = IntervalUnion([0.5])     # [-3/4, -1/4] U [1/4, 3/4]
    """
    dimension = 1
    kind = INTERVAL_UNION

    def __init__(self, gaps=()):
        gaps = [float(g) for g in gaps]
        assert all(g >= 0 for g in gaps), "gaps must be non-negative."
        assert np.allclose(gaps, gaps[::-1]), "gaps must be a palindrome."
        super(IntervalUnion, self).__init__(max(gaps) if gaps else 0.0)
        self.gaps = gaps
        m = len(gaps) + 1
        length = 1.0 / m
        left = -0.5 * (1.0 + sum(gaps))
        lefts, rights = [], []
        for i in range(m):
            lefts.append(left)
            rights.append(left + length)
            if i < len(gaps):
                left += length + gaps[i]
        self.lefts = np.array(lefts)
        self.rights = np.array(rights)

    def k_transform(self, x):
        x = np.asarray(x, dtype=float)
        total = np.zeros_like(x)
        for a, b in zip(self.lefts, self.rights):
            total = total + b * np.sinc(2.0 * b * x) - a * np.sinc(2.0 * a * x)
        return _scalar(total)

    def positive_frequencies(self):
        """Non-zero endpoints e > 0 whose signed contributions do not cancel."""
        weights = {}
        for a, b in zip(self.lefts, self.rights):
            for e, sign in ((b, 1.0), (a, -1.0)):
                if e > _EDGE_TOL:
                    key = round(e, 12)
                    weights[key] = weights.get(key, 0.0) + sign
        return sorted(e for e, w in weights.items() if abs(w) > 0.5)

    def autocorrelation(self, w):
        w = np.asarray(w, dtype=float)
        total = np.zeros_like(w)
        for a_i, b_i in zip(self.lefts, self.rights):
            for a_j, b_j in zip(self.lefts, self.rights):
                lo = np.maximum(a_i, a_j + w)
                hi = np.minimum(b_i, b_j + w)
                total = total + np.maximum(hi - lo, 0.0)
        return _scalar(total)

    def __repr__(self):
        return 'IntervalUnion(gaps=%s)' % self.gaps


class _RadialSet(SetFamily):
    dimension = 2

    def radial_k(self, r):
        raise NotImplementedError()

    def radial_autocorrelation(self, r):
        raise NotImplementedError()

    def k_transform(self, v):
        x, y = _plane_coordinates(v)
        return _scalar(self.radial_k(np.hypot(x, y)))

    def autocorrelation(self, w):
        x, y = _plane_coordinates(w)
        return _scalar(self.radial_autocorrelation(np.hypot(x, y)))


class Annulus(_RadialSet):
    """
    {r0 <= |xi| <= R} with pi (R^2 - r0^2) = 1; ``inner_radius`` 0 is the disk.

    k(v) = [R J1(2 pi R |v|) - r0 J1(2 pi r0 |v|)] / |v|.
    """
    kind = ANNULUS

    def __init__(self, inner_radius=0.0):
        assert inner_radius >= 0, "inner_radius must be non-negative."
        super(Annulus, self).__init__(inner_radius)
        self.inner_radius = float(inner_radius)
        self.outer_radius = math.sqrt(1.0 / math.pi + self.inner_radius ** 2)

    def radial_k(self, r):
        r = np.asarray(r, dtype=float)
        small = r < 1e-8
        safe = np.where(small, 1.0, r)
        R, r0 = self.outer_radius, self.inner_radius
        value = R * bessel_j1(2.0 * math.pi * R * safe)
        if r0 > 0:
            value = value - r0 * bessel_j1(2.0 * math.pi * r0 * safe)
        return np.where(small, 1.0, value / safe)

    def radial_autocorrelation(self, r):
        R, r0 = self.outer_radius, self.inner_radius
        return lens_area(R, R, r) - 2.0 * lens_area(R, r0, r) + lens_area(r0, r0, r)

    def tail_coefficient(self):
        """C in the mean decay of k^2 ~ C / (2 pi^2 |v|^3)."""
        return self.outer_radius + self.inner_radius

    def support_radius(self):
        return 2.0 * self.outer_radius


class Disk(Annulus):
    """The disk of area 1, k(v) = J1(2 sqrt(pi) |v|) / (sqrt(pi) |v|)."""
    kind = DISK

    def __init__(self):
        super(Disk, self).__init__(0.0)


class Rectangle(SetFamily):
    """
    Centered rectangle with sides sqrt(aspect) and 1 / sqrt(aspect).

    k(x, y) = a sinc(a x) b sinc(b y) for the sides a, b.
    """
    dimension = 2
    kind = RECTANGLE

    def __init__(self, aspect=1.0):
        assert aspect > 0, "aspect must be positive."
        super(Rectangle, self).__init__(aspect)
        self.aspect = float(aspect)
        self.side_a = math.sqrt(self.aspect)
        self.side_b = 1.0 / self.side_a

    def k_transform(self, v):
        x, y = _plane_coordinates(v)
        a, b = self.side_a, self.side_b
        return _scalar(a * np.sinc(a * x) * b * np.sinc(b * y))

    def autocorrelation(self, w):
        x, y = _plane_coordinates(w)
        a, b = self.side_a, self.side_b
        return _scalar(np.maximum(a - np.abs(x), 0.0) * np.maximum(b - np.abs(y), 0.0))
