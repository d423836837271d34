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

from ..errors import InvalidDimensionError
from .arrays import FloatArray, as_float_matrix


@dataclass
class SymplecticMatrix:
    """A real 2n x 2n matrix S with S J S^T = J.

    Membership is checked by :func:`blobkit.symplectic.as_symplectic`; the
    dataclass itself only enforces the shape.

    Attributes:
        S: The matrix, split as [[A, B], [C, D]] with n x n blocks.
    """

    S: FloatArray

    def __post_init__(self) -> None:
        """Coerce S to float64 and check that its dimension is even.

        Raises:
            InvalidDimensionError: If S is not square with even dimension.
        """
        matrix = as_float_matrix(self.S, "S")
        if matrix.shape[0] == 0 or matrix.shape[0] % 2:
            raise InvalidDimensionError(
                f"symplectic matrices have even dimension, got {matrix.shape}"
            )
        self.S = matrix

    @property
    def n(self) -> int:
        """Degrees of freedom."""
        return int(self.S.shape[0] // 2)

    @property
    def A(self) -> FloatArray:
        return self.S[: self.n, : self.n]

    @property
    def B(self) -> FloatArray:
        return self.S[: self.n, self.n :]

    @property
    def C(self) -> FloatArray:
        return self.S[self.n :, : self.n]

    @property
    def D(self) -> FloatArray:
        return self.S[self.n :, self.n :]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {"n": self.n, "S": self.S.tolist()}
