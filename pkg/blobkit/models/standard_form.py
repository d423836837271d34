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

from .arrays import FloatArray


@dataclass
class StandardForm:
    """The standard symplectic matrix J = [[0, I], [-I, 0]].

    Attributes:
        n: Number of degrees of freedom.
        J: The 2n x 2n matrix; integer valued, so J @ J == -I exactly.
    """

    n: int
    J: FloatArray

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {"n": self.n, "J": self.J.tolist()}
