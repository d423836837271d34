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

from dataclasses import dataclass
from typing import Any, Dict


@dataclass
class SweepPoint:
    """Grid sup-norm deviation |a * W psi - a| at one value of hbar.

    Attributes:
        hbar: Reduced Planck constant.
        deviation: Maximum over the phase-space grid.
    """

    hbar: float
    deviation: float

    def to_dict(self) -> Dict[str, Any]:
        return {"hbar": self.hbar, "deviation": self.deviation}
