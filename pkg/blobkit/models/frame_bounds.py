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

from ..errors import InvalidInputError


@dataclass
class FrameBounds:
    """Frame bounds a <= b of a Weyl-Heisenberg system.

    Attributes:
        a: Lower bound (0 means no frame).
        b: Upper bound.
    """

    a: float
    b: float

    def __post_init__(self) -> None:
        self.a = max(float(self.a), 0.0)
        self.b = float(self.b)
        if self.b <= 0 or self.a > self.b:
            raise InvalidInputError(f"invalid frame bounds a={self.a}, b={self.b}")

    @property
    def ratio(self) -> float:
        """a / b; 1 for a tight frame."""
        return self.a / self.b

    def to_dict(self) -> Dict[str, Any]:
        return {"a": self.a, "b": self.b, "ratio": self.ratio}
