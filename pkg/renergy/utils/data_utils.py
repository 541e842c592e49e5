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
| Tools for data: npz caching of configuration lists, result tables and run
| manifests.
"""

import os
import json
import numpy as np
import pandas as pd

import renergy

__all__ = [
    'FLOAT_FORMAT',
    'save_data_list_to_npz',
    'load_npz_to_data_list',
    'write_table',
    'write_manifest',
]

FLOAT_FORMAT = '%.12g'


def save_data_list_to_npz(data_list, npz_file):
    """
    Save a list of data to the npz file. Each data is a dict of numpy ndarray
    with the same keys; arrays are concatenated along axis 0 and their lengths
    kept under ``<key>.seq_len``. Scalars are stored as length-1 arrays.

    Args:
        data_list(list): a non-empty list of data.
        npz_file(str): the npz file location.
    """
    assert len(data_list) > 0, "data_list must not be empty."
    keys = data_list[0].keys()
    merged_data = {}
    for key in keys:
        values = [np.atleast_1d(np.asarray(data[key])) for data in data_list]
        merged_data[key] = np.concatenate(values, 0)
        merged_data[key + '.seq_len'] = np.array([len(v) for v in values])
    np.savez_compressed(npz_file, **merged_data)


def load_npz_to_data_list(npz_file):
    """
    Reload the data list saved by ``save_data_list_to_npz``.

    Returns:
        a list of dicts of numpy ndarray.
    """
    merged_data = np.load(npz_file)
    names = sorted(name for name in merged_data.keys() if not name.endswith('.seq_len'))
    data_dict = {}
    for name in names:
        ends = np.cumsum(merged_data[name + '.seq_len'])
        data_dict[name] = np.split(merged_data[name], ends[:-1])
    n = len(data_dict[names[0]])
    return [{name: data_dict[name][i] for name in names} for i in range(n)]


def write_table(rows, path, columns, fmt='csv'):
    """
    Write result rows with a fixed column order.

    CSV floats carry 12 significant digits; the JSON mirror holds the same
    fields as a list of objects.

    Args:
        rows(list): list of dicts.
        path(str): output file.
        columns(list): column order.
        fmt(str): 'csv' or 'json'.
    """
    df = pd.DataFrame(rows, columns=columns)
    if fmt == 'csv':
        df.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    elif fmt == 'json':
        records = [{c: _json_value(row.get(c)) for c in columns} for row in rows]
        with open(path, 'w') as f:
            json.dump(records, f, indent=2)
    else:
        raise ValueError('Unsupported table format: %s' % fmt)
    return path


def write_manifest(out_path, command, parameters, seed=None, outputs=None):
    """
    Write ``<out_path>.manifest.json`` describing how ``out_path`` was produced.

    Returns:
        the manifest path.
    """
    manifest = {
        'command': command,
        'parameters': {k: _json_value(v) for k, v in sorted(parameters.items())},
        'seed': seed,
        'artifact_version': renergy.__version__,
        'outputs': [os.path.abspath(p) for p in (outputs or [out_path])],
    }
    manifest_path = out_path + '.manifest.json'
    with open(manifest_path, 'w') as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
    return manifest_path


def _json_value(value):
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if np.isfinite(value) else None
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value
