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

from .arrays import FloatArray, as_float_matrix
from .symplectic_matrix import SymplecticMatrix


@dataclass
class PreIwasawaFactors:
    """The factorization S = V_P M_L R of a symplectic matrix.

    Attributes:
        P: Symmetric n x n shear parameter.
        L: Symmetric positive-definite n x n scaling parameter.
        R: Symplectic rotation [[U, V], [-V, U]].
    """

    P: FloatArray
    L: FloatArray
    R: SymplecticMatrix

    def __post_init__(self) -> None:
        """Coerce the parameter blocks to float64 matrices."""
        self.P = as_float_matrix(self.P, "P")
        self.L = as_float_matrix(self.L, "L")

    @property
    def U(self) -> FloatArray:
        return self.R.A

    @property
    def V(self) -> FloatArray:
        return self.R.B

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "n": self.R.n,
            "P": self.P.tolist(),
            "L": self.L.tolist(),
            "R": self.R.S.tolist(),
        }
