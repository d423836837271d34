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

from .symplectic_spectrum import SymplecticSpectrum


@dataclass
class UncertaintyReport:
    """Outcome of the uncertainty tests on one covariance matrix.

    Attributes:
        rs2_holds: Whether Sigma + (i hbar / 2) J is positive semidefinite.
        rs1_holds_per_j: Componentwise test for each degree of freedom.
        symplectic_spectrum: Williamson eigenvalues of Sigma.
        capacity: Symplectic capacity of the covariance ellipsoid.
        saturated: Whether the smallest Williamson eigenvalue equals hbar / 2.
        hbar: The Planck constant the tests were run at.
    """

    rs2_holds: bool
    symplectic_spectrum: SymplecticSpectrum
    capacity: float
    saturated: bool
    hbar: float = 1.0
    rs1_holds_per_j: List[bool] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "rs2_holds": self.rs2_holds,
            "rs1_holds_per_j": list(self.rs1_holds_per_j),
            "symplectic_spectrum": self.symplectic_spectrum.eigenvalues.tolist(),
            "capacity": self.capacity,
            "saturated": self.saturated,
            "hbar": self.hbar,
        }
