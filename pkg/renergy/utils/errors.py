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
| Exceptions raised by renergy.
"""

__all__ = [
    'RenergyError',
    'DomainError',
    'SingularityError',
    'CoincidentPointsError',
    'QuadratureError',
    'ConvergenceError',
    'DegenerateDistributionError',
    'ConfigurationParseError',
]


class RenergyError(Exception):
    """Base class of all errors raised by the library."""
    pass


class DomainError(RenergyError, ValueError):
    """An argument lies outside the domain of a special function."""
    pass


class SingularityError(RenergyError, ValueError):
    """A kernel was evaluated on (or too close to) its logarithmic singularity."""
    pass


class CoincidentPointsError(RenergyError, ValueError):
    """Two points of a configuration coincide, so the energy is infinite."""
    pass


class QuadratureError(RenergyError, ArithmeticError):
    """
    The error bound of a quadrature exceeds the requested tolerance.

    Attributes:
        value(float): the best available estimate.
        error(float): its error bound.
    """
    def __init__(self, message, value=None, error=None):
        super(QuadratureError, self).__init__(message)
        self.value = value
        self.error = error


class ConvergenceError(RenergyError, ArithmeticError):
    """An iterative solver (eigensolver, root finder, sampler) failed."""
    pass


class DegenerateDistributionError(RenergyError, ValueError):
    """A statistic was requested for a distribution with zero variance."""
    pass


class ConfigurationParseError(RenergyError, ValueError):
    """
    A point-set or config file could not be parsed.

    Attributes:
        line_number(int): 1-based line of the offending input, or None.
    """
    def __init__(self, message, line_number=None, path=None):
        if line_number is not None:
            message = 'line %d: %s' % (line_number, message)
        if path is not None:
            message = '%s: %s' % (path, message)
        super(ConfigurationParseError, self).__init__(message)
        self.line_number = line_number
        self.path = path
