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

from ..errors import InvalidDimensionError
from .arrays import FloatArray, as_float_matrix, as_float_vector, require_positive


@dataclass
class GaussianState:
    """A generalized squeezed coherent state psi_XY translated to z0.

    The represented function is
    (det X)^(1/4) (pi hbar)^(-n/4) exp(-(X + iY)(x - x0).(x - x0) / 2 hbar)
    times the phase factors of the Heisenberg operator T(z0) and ``phase``.

    Attributes:
        X: Symmetric positive-definite n x n matrix.
        Y: Symmetric n x n matrix. Defaults to zero.
        z0: Phase-space center. Defaults to the origin.
        hbar: Reduced Planck constant.
        phase: Unit-modulus global phase; never used for equality.
    """

    X: FloatArray
    Y: Optional[FloatArray] = None
    z0: Optional[FloatArray] = None
    hbar: float = 1.0
    phase: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        """Coerce parameters to arrays; positivity is checked on use.

        Raises:
            InvalidDimensionError: If X and Y have different shapes.
        """
        self.X = as_float_matrix(self.X, "X")
        if self.Y is None:
            self.Y = np.zeros_like(self.X)
        self.Y = as_float_matrix(self.Y, "Y")
        if self.Y.shape != self.X.shape:
            raise InvalidDimensionError(
                f"X and Y shapes differ: {self.X.shape} vs {self.Y.shape}"
            )
        if self.z0 is None:
            self.z0 = np.zeros(2 * self.X.shape[0])
        self.z0 = as_float_vector(self.z0, "z0", 2 * self.X.shape[0])
        self.hbar = require_positive(self.hbar, "hbar")
        self.phase = complex(self.phase)

    @property
    def n(self) -> int:
        return int(self.X.shape[0])

    @property
    def y_matrix(self) -> FloatArray:
        assert self.Y is not None
        return self.Y

    @property
    def center(self) -> FloatArray:
        assert self.z0 is not None
        return self.z0

    @property
    def complex_matrix(self) -> Any:
        """X + iY."""
        return self.X + 1j * self.y_matrix

    @staticmethod
    def standard(n: int = 1, hbar: float = 1.0) -> "GaussianState":
        """The fiducial coherent state with X = I, Y = 0."""
        return GaussianState(X=np.eye(n), hbar=hbar)

    def with_center(self, z0: Any) -> "GaussianState":
        """Create a copy of this state translated to z0."""
        new = GaussianState(**self.__dict__)
        new.z0 = as_float_vector(z0, "z0", 2 * self.n)
        return new

    def with_phase(self, phase: complex) -> "GaussianState":
        """Create a copy of this state with another global phase."""
        new = GaussianState(**self.__dict__)
        new.phase = complex(phase)
        return new

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "n": self.n,
            "hbar": self.hbar,
            "X": self.X.tolist(),
            "Y": self.y_matrix.tolist(),
            "z0": self.center.tolist(),
        }
