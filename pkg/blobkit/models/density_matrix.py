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

from dataclasses import dataclass, field
from typing import Any, Dict, List

from .arrays import FloatArray
from .discretized_operator import DiscretizedOperator
from .sampled_state import SampledState


@dataclass
class DensityMatrix:
    """A positive semidefinite unit-trace operator with its spectrum.

    Attributes:
        operator: The matrix of rho on the grid.
        trace: Matrix trace of rho.
        min_eigenvalue: Smallest eigenvalue.
        spectrum: Eigenvalues, sorted descending.
        eigenstates: Normalized eigenvectors matching ``spectrum``.
    """

    operator: DiscretizedOperator
    trace: float
    min_eigenvalue: float
    spectrum: FloatArray
    eigenstates: List[SampledState] = field(default_factory=list)

    @property
    def purity(self) -> float:
        """Tr(rho^2)."""
        return float((self.spectrum**2).sum())

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary (leading eigenvalues only)."""
        return {
            "trace": self.trace,
            "min_eigenvalue": self.min_eigenvalue,
            "purity": self.purity,
            "spectrum": self.spectrum[:10].tolist(),
        }
