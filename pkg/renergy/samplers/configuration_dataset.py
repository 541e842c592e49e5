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
| Replica store for sampled point configurations, cached as npz parts.
"""

import os
import numpy as np

from renergy.utils.data_utils import save_data_list_to_npz, load_npz_to_data_list
from renergy.energy.configuration import PointConfiguration, save_point_configuration


__all__ = ['ConfigurationDataset', 'export_point_sets']


REPLICAS_PER_PART = 10000
PART_PATTERN = 'part-%05d.npz'


class ConfigurationDataset(object):
    """
    Description:

        Holds one record per Monte Carlo replica. A record is the dict of
        arrays from ``PointConfiguration.to_dict``, with an optional
        one-element ``energy`` array.

        Integer indexing returns a record; slices and index lists return a new
        dataset. ``configuration(i)`` rebuilds the i-th point configuration.

    Args:
        data_list(list): records kept in memory.
        npz_data_path(str): a directory written by ``save_data``.

    Exactly one of the two must be given.

    Example:
        .. code-block:: python

            dataset = ConfigurationDataset.from_configurations(configs, energies)
            dataset.save_data('./samples')
            print(len(ConfigurationDataset(npz_data_path='./samples')))

    """
    def __init__(self, data_list=None, npz_data_path=None):
        super(ConfigurationDataset, self).__init__()
        assert (data_list is None) != (npz_data_path is None), \
                "exactly one of data_list and npz_data_path is required."
        self.npz_data_path = npz_data_path
        if npz_data_path is None:
            self.data_list = data_list
        else:
            self.data_list = self._read_parts(npz_data_path)

    @classmethod
    def from_configurations(cls, configs, energies=None):
        """Build a dataset from configurations and, optionally, their energies."""
        records = [config.to_dict() for config in configs]
        if energies is not None:
            for record, energy in zip(records, energies):
                record['energy'] = np.array([energy], dtype=float)
        return cls(data_list=records)

    @staticmethod
    def _read_parts(directory):
        parts = sorted(name for name in os.listdir(directory) if name.endswith('.npz'))
        records = []
        for name in parts:
            records.extend(load_npz_to_data_list(os.path.join(directory, name)))
        return records

    def save_data(self, data_path):
        """
        Write the records to ``data_path`` in parts of at most
        ``REPLICAS_PER_PART`` records. An empty dataset writes nothing.
        """
        if not self.data_list:
            return
        os.makedirs(data_path, exist_ok=True)
        for part, start in enumerate(range(0, len(self.data_list), REPLICAS_PER_PART)):
            chunk = self.data_list[start: start + REPLICAS_PER_PART]
            save_data_list_to_npz(chunk, os.path.join(data_path, PART_PATTERN % part))

    def configuration(self, index):
        return PointConfiguration.from_dict(self.data_list[index])

    def energies(self):
        """Recorded energies, NaN for records without one."""
        return np.array([float(np.ravel(record['energy'])[0]) if 'energy' in record else np.nan
                for record in self.data_list])

    def __getitem__(self, key):
        if isinstance(key, (int, np.integer)):
            return self.data_list[key]
        if isinstance(key, slice):
            return ConfigurationDataset(data_list=self.data_list[key])
        if isinstance(key, list):
            return ConfigurationDataset(data_list=[self.data_list[i] for i in key])
        raise TypeError('Invalid argument type: %s of %s' % (type(key), key))

    def __len__(self):
        return len(self.data_list)


def export_point_sets(dataset, directory):
    """
    Write every configuration of ``dataset`` as ``sample-%05d.txt`` in the
    point-set text format.

    Returns:
        the list of written paths.
    """
    os.makedirs(directory, exist_ok=True)
    paths = []
    for i in range(len(dataset)):
        path = os.path.join(directory, 'sample-%05d.txt' % i)
        save_point_configuration(dataset.configuration(i), path)
        paths.append(path)
    return paths
