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

import numpy as np

from ..errors import InvalidDimensionError, InvalidInputError
from .arrays import ComplexArray, FloatArray, require_positive
from .sample_grid import SampleGrid


@dataclass
class PhaseSpaceFunction:
    """Samples of a function on a product grid x_i, p_j.

    Attributes:
        x: Position axis, uniformly spaced.
        p: Momentum axis, uniformly spaced.
        values: Array of shape (len(x), len(p)).
        hbar: Reduced Planck constant of the grid.
    """

    x: FloatArray
    p: FloatArray
    values: ComplexArray
    hbar: float = 1.0

    def __post_init__(self) -> None:
        """Coerce the axes and values and check their shapes.

        Raises:
            InvalidDimensionError: If the value shape does not match the axes.
            InvalidInputError: If a value is not finite.
        """
        self.x = np.asarray(self.x, dtype=np.float64).reshape(-1)
        self.p = np.asarray(self.p, dtype=np.float64).reshape(-1)
        self.values = np.asarray(self.values)
        if self.values.shape != (self.x.size, self.p.size):
            raise InvalidDimensionError(
                f"values shape {self.values.shape} does not match axes "
                f"({self.x.size}, {self.p.size})"
            )
        if not np.all(np.isfinite(self.values)):
            raise InvalidInputError("phase-space samples must be finite")
        self.hbar = require_positive(self.hbar, "hbar")

    @staticmethod
    def on_grid(grid: SampleGrid, values: Any) -> "PhaseSpaceFunction":
        """Samples on the square grid induced by a SampleGrid."""
        return PhaseSpaceFunction(x=grid.x, p=grid.p, values=values, hbar=grid.hbar)

    @property
    def dx(self) -> float:
        return float(self.x[1] - self.x[0])

    @property
    def dp(self) -> float:
        return float(self.p[1] - self.p[0])

    @property
    def is_square(self) -> bool:
        return bool(self.x.size == self.p.size)

    @property
    def real(self) -> "PhaseSpaceFunction":
        return PhaseSpaceFunction(self.x, self.p, np.real(self.values), self.hbar)

    def integral(self) -> complex:
        """Riemann sum of the samples over the grid."""
        return complex(np.sum(self.values) * self.dx * self.dp)

    def l1_norm(self) -> float:
        return float(np.sum(np.abs(self.values)) * self.dx * self.dp)

    def l2_norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.dx * self.dp))

    def with_values(self, values: Any) -> "PhaseSpaceFunction":
        """Create a function on the same axes with other samples."""
        return PhaseSpaceFunction(self.x, self.p, values, self.hbar)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary (axes summarized)."""
        return {
            "Nx": int(self.x.size),
            "Np": int(self.p.size),
            "dx": self.dx,
            "dp": self.dp,
            "x0": float(self.x[0]),
            "p0": float(self.p[0]),
            "hbar": self.hbar,
        }
