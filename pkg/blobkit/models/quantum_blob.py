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
from typing import Any, Dict, Optional

import numpy as np

from .arrays import FloatArray, as_float_vector, require_positive
from .symplectic_matrix import SymplecticMatrix


@dataclass
class QuantumBlob:
    """The image S(B(z0, sqrt(hbar))) of a phase-space ball.

    Attributes:
        S: Symplectic matrix deforming the ball.
        z0: Center of the blob. Defaults to the origin.
        hbar: Reduced Planck constant fixing the ball radius.
    """

    S: SymplecticMatrix
    z0: Optional[FloatArray] = None
    hbar: float = 1.0

    def __post_init__(self) -> None:
        """Default the center to the origin and validate hbar."""
        if self.z0 is None:
            self.z0 = np.zeros(2 * self.S.n)
        self.z0 = as_float_vector(self.z0, "z0", 2 * self.S.n)
        self.hbar = require_positive(self.hbar, "hbar")

    @property
    def n(self) -> int:
        return self.S.n

    @property
    def center(self) -> FloatArray:
        assert self.z0 is not None
        return self.z0

    def with_center(self, z0: Any) -> "QuantumBlob":
        """Create a copy of this blob centered at z0."""
        new = QuantumBlob(**self.__dict__)
        new.z0 = as_float_vector(z0, "z0", 2 * self.n)
        return new

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "n": self.n,
            "S": self.S.S.tolist(),
            "z0": self.center.tolist(),
            "hbar": self.hbar,
        }
