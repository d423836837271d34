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

import json
import zlib
from typing import Any, Dict


def get_crc32_hash(text: str) -> str:
    """Returns a consistent hash for the given text by using CRC32 hash of a string."""
    return str(zlib.crc32(str(text).encode()) & 0xFFFFFFFF)


def config_digest(config: Dict[str, Any]) -> str:
    """CRC32 of the canonical JSON form of a configuration."""
    return get_crc32_hash(
        json.dumps(config, sort_keys=True, separators=(",", ":"), default=str)
    )
