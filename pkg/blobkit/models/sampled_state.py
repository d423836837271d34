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
from .arrays import ComplexArray
from .sample_grid import SampleGrid


@dataclass
class SampledState:
    """Complex samples of a wavefunction on a grid.

    Attributes:
        grid: The position grid.
        values: N complex samples psi(x_j).
    """

    grid: SampleGrid
    values: ComplexArray

    def __post_init__(self) -> None:
        """Coerce the samples to complex128 and check their count.

        Raises:
            InvalidDimensionError: If the number of samples differs from N.
            InvalidInputError: If a sample is not finite.
        """
        self.values = np.asarray(self.values, dtype=np.complex128).reshape(-1)
        if self.values.size != self.grid.N:
            raise InvalidDimensionError(
                f"expected {self.grid.N} samples, got {self.values.size}"
            )
        if not np.all(np.isfinite(self.values)):
            raise InvalidInputError("state samples must be finite")

    @property
    def norm(self) -> float:
        """L2 norm by the Riemann sum sum |psi|^2 dx."""
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.grid.dx))

    def normalized(self) -> "SampledState":
        """Return the state scaled to unit L2 norm."""
        norm = self.norm
        if norm == 0:
            raise InvalidInputError("cannot normalize the zero state")
        return SampledState(self.grid, self.values / norm)

    def with_values(self, values: Any) -> "SampledState":
        """Create a state on the same grid with other samples."""
        return SampledState(self.grid, values)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "grid": self.grid.to_dict(),
            "re": self.values.real.tolist(),
            "im": self.values.imag.tolist(),
        }
