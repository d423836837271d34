# Copyright 2026 The blobkit Authors
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

import math
from typing import Any, Dict

import numpy as np


def _check_if_empty_or_none(value: Any) -> bool:
    """Check if a value is empty or None."""
    if isinstance(value, np.ndarray):
        return value.size == 0
    return (
        value is None
        or value == ""
        or value == []
        or value == {}
        or value == ()
    )


def clean_values(d: Dict[str, Any] | Any) -> Dict[str, Any] | Any:
    """Make a payload JSON-ready and drop empty or None entries.

    Args:
        d: Input dictionary or any other value

    Returns:
        If input is a dictionary: A new dictionary with empty/None values removed
        If input is a list or tuple: A new list with cleaned elements
        If input is a numpy array or scalar: Its cleaned Python equivalent
        If input is complex: A {"re", "im"} dictionary
        If input is a non-finite float: Its string form
        Otherwise: The input value unchanged
    """
    match d:
        case dict():
            return {
                k: clean_values(v)
                for k, v in d.items()
                if not _check_if_empty_or_none(v)
            }
        case list() | tuple():
            return [clean_values(v) for v in d]
        case np.ndarray():
            return clean_values(d.tolist())
        case np.generic():
            return clean_values(d.item())
        case complex():
            return {"re": clean_values(d.real), "im": clean_values(d.imag)}
        case float() if not math.isfinite(d):
            return str(d)
        case _:
            return d
