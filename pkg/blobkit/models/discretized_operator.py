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
from .sampled_state import SampledState


@dataclass
class DiscretizedOperator:
    """An operator acting on grid samples as a matrix.

    Entries already carry the quadrature weight, so K(x_j, x_k) dx is stored
    and the action on a state is a plain matrix-vector product.

    Attributes:
        grid: The grid the operator acts on.
        matrix: N x N complex matrix.
        label: Provenance of the operator, e.g. "weyl" or "toeplitz".
    """

    grid: SampleGrid
    matrix: ComplexArray
    label: str = ""

    def __post_init__(self) -> None:
        """Coerce the matrix and check its shape.

        Raises:
            InvalidDimensionError: If the matrix is not N x N.
            InvalidInputError: If an entry is not finite.
        """
        self.matrix = np.asarray(self.matrix, dtype=np.complex128)
        if self.matrix.shape != (self.grid.N, self.grid.N):
            raise InvalidDimensionError(
                f"expected a {self.grid.N}x{self.grid.N} matrix, "
                f"got {self.matrix.shape}"
            )
        if not np.all(np.isfinite(self.matrix)):
            raise InvalidInputError("operator entries must be finite")

    def apply(self, state: SampledState) -> SampledState:
        """Apply the operator to a state on the same grid."""
        if not self.grid.matches(state.grid):
            raise InvalidInputError("operator and state live on different grids")
        return SampledState(self.grid, self.matrix @ state.values)

    def compose(
        self, other: "DiscretizedOperator", label: str = ""
    ) -> "DiscretizedOperator":
        """Return the product self @ other."""
        if not self.grid.matches(other.grid):
            raise InvalidInputError("operators live on different grids")
        return DiscretizedOperator(
            self.grid,
            self.matrix @ other.matrix,
            label or f"{self.label}*{other.label}",
        )

    def adjoint(self) -> "DiscretizedOperator":
        return DiscretizedOperator(self.grid, self.matrix.conj().T, f"{self.label}^*")

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def max_abs_diff(self, other: Any) -> float:
        """Largest entrywise deviation from another operator or matrix."""
        matrix = other.matrix if isinstance(other, DiscretizedOperator) else other
        return float(np.max(np.abs(self.matrix - np.asarray(matrix))))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary (matrix omitted)."""
        return {"grid": self.grid.to_dict(), "label": self.label}
