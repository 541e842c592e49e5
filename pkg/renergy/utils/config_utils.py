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
| Loading of JSON configuration files.
"""

import json

from renergy.utils.errors import ConfigurationParseError

__all__ = ['load_json_config']


def load_json_config(path):
    """
    Read a JSON object from ``path``.

    Raises:
        ConfigurationParseError: on malformed JSON or a non-object top level.
    """
    try:
        with open(path) as f:
            config = json.load(f)
    except ValueError as e:
        raise ConfigurationParseError(str(e), line_number=getattr(e, 'lineno', None), path=path)
    if not isinstance(config, dict):
        raise ConfigurationParseError('expected a JSON object', path=path)
    return config
