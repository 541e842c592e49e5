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
| Point configurations on the 1D torus [0, N) and the 2D torus [0, N)^2,
| and their plain-text file format.

The text format is a header line ``N=<window>`` followed by one point per
line, ``x`` in 1D or ``x y`` in 2D. Blank lines and ``#`` comments are ignored.
"""

import numpy as np

from renergy.utils.errors import ConfigurationParseError

__all__ = [
    'PointConfiguration',
    'PointConfiguration1D',
    'PointConfiguration2D',
    'load_point_configuration',
    'save_point_configuration',
]


class PointConfiguration(object):
    """
    Abstract finite configuration on a torus of side ``window``.

    Points on or beyond the window boundary are wrapped into [0, window).

    Attributes:
        points(ndarray): float array in 1D, complex array in 2D.
        window(float): the torus side N.
    """
    dimension = None

    def __init__(self, points, window):
        super(PointConfiguration, self).__init__()
        assert window > 0, "window must be positive."
        self.window = float(window)
        self.points = self._wrap(points)

    def _wrap(self, points):
        raise NotImplementedError()

    def __len__(self):
        return len(self.points)

    def coordinates(self):
        """Points as a real array of shape (k, dimension)."""
        raise NotImplementedError()

    def to_dict(self):
        """Dict of numpy arrays, the storage unit of ``ConfigurationDataset``."""
        return {
            'points': self.coordinates(),
            'window': np.array([self.window]),
            'dimension': np.array([self.dimension]),
        }

    @staticmethod
    def from_dict(data):
        window = float(np.ravel(data['window'])[0])
        dimension = int(np.ravel(data['dimension'])[0])
        coords = np.asarray(data['points'], dtype=float).reshape(-1, dimension)
        if dimension == 1:
            return PointConfiguration1D(coords[:, 0], window)
        return PointConfiguration2D(coords[:, 0] + 1j * coords[:, 1], window)


class PointConfiguration1D(PointConfiguration):
    """Points a_1, ..., a_k in [0, N)."""
    dimension = 1

    def _wrap(self, points):
        points = np.asarray(points, dtype=float).reshape(-1)
        return np.mod(points, self.window)

    def coordinates(self):
        return self.points.reshape(-1, 1)


class PointConfiguration2D(PointConfiguration):
    """Points a_1, ..., a_k in [0, N)^2, stored as complex numbers."""
    dimension = 2

    def _wrap(self, points):
        points = np.asarray(points)
        if not np.iscomplexobj(points):
            points = np.asarray(points, dtype=float).reshape(-1, 2)
            points = points[:, 0] + 1j * points[:, 1]
        points = points.reshape(-1)
        return np.mod(points.real, self.window) + 1j * np.mod(points.imag, self.window)

    def coordinates(self):
        return np.stack([self.points.real, self.points.imag], axis=1)


def load_point_configuration(path, dimension=None):
    """
    Parse a point-set file.

    Args:
        path(str): file location.
        dimension(int): 1 or 2; inferred from the first point line when None.

    Returns:
        a ``PointConfiguration1D`` or ``PointConfiguration2D``.

    Raises:
        ConfigurationParseError: with the 1-based number of the offending line.
    """
    window = None
    rows = []
    with open(path) as f:
        for line_number, raw in enumerate(f, 1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if window is None:
                window = _parse_header(line, line_number, path)
                continue
            fields = line.replace(',', ' ').split()
            if dimension is None:
                dimension = len(fields)
            if len(fields) != dimension or dimension not in (1, 2):
                raise ConfigurationParseError(
                        'expected %s coordinate(s), got %d' % (dimension, len(fields)),
                        line_number=line_number, path=path)
            try:
                rows.append([float(v) for v in fields])
            except ValueError:
                raise ConfigurationParseError('not a number: %r' % line,
                        line_number=line_number, path=path)
            if not np.all(np.isfinite(rows[-1])):
                raise ConfigurationParseError('non-finite coordinate', line_number=line_number, path=path)
    if window is None:
        raise ConfigurationParseError('missing header "N=<window>"', path=path)
    dimension = dimension or 1
    coords = np.array(rows, dtype=float).reshape(-1, dimension)
    if dimension == 1:
        return PointConfiguration1D(coords[:, 0], window)
    return PointConfiguration2D(coords[:, 0] + 1j * coords[:, 1], window)


def _parse_header(line, line_number, path):
    key, sep, value = line.partition('=')
    if not sep or key.strip() != 'N':
        raise ConfigurationParseError('expected header "N=<window>", got %r' % line,
                line_number=line_number, path=path)
    try:
        window = float(value)
    except ValueError:
        raise ConfigurationParseError('window is not a number: %r' % value.strip(),
                line_number=line_number, path=path)
    if not window > 0 or not np.isfinite(window):
        raise ConfigurationParseError('window must be positive, got %r' % window,
                line_number=line_number, path=path)
    return window


def save_point_configuration(config, path):
    """Write ``config`` in the point-set text format, full double precision."""
    with open(path, 'w') as f:
        f.write('N=%r\n' % config.window)
        for row in config.coordinates():
            f.write(' '.join('%.17g' % c for c in row) + '\n')
    return path
