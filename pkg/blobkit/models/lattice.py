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

from ..errors import InvalidInputError
from .arrays import FloatArray, as_float_matrix, require_positive


@dataclass
class Lattice:
    """A phase-space lattice M(Z^2) truncated to a disc.

    Either the generator matrix or the separable spacings alpha, beta must be
    given; alpha, beta mean the lattice alpha Z x beta Z.

    Attributes:
        radius: Truncation radius rho; points with |z| <= rho are enumerated.
        alpha: Position spacing of a separable lattice.
        beta: Momentum spacing of a separable lattice.
        matrix: Invertible 2 x 2 generator matrix M.
    """

    radius: float
    alpha: Optional[float] = None
    beta: Optional[float] = None
    matrix: Optional[FloatArray] = None

    def __post_init__(self) -> None:
        """Derive the generator matrix and check that it is invertible.

        Raises:
            InvalidInputError: If neither a matrix nor (alpha, beta) is given,
                or the generator is singular.
        """
        self.radius = float(self.radius)
        if self.matrix is None:
            if self.alpha is None or self.beta is None:
                raise InvalidInputError("lattice needs a matrix or alpha and beta")
            self.alpha = require_positive(self.alpha, "alpha")
            self.beta = require_positive(self.beta, "beta")
            self.matrix = np.diag([self.alpha, self.beta])
        self.matrix = as_float_matrix(self.matrix, "lattice matrix")
        if self.matrix.shape != (2, 2):
            raise InvalidInputError("only 2 x 2 lattice generators are supported")
        if abs(np.linalg.det(self.matrix)) < 1e-14:
            raise InvalidInputError("lattice generator matrix is singular")

    @property
    def generator(self) -> FloatArray:
        assert self.matrix is not None
        return self.matrix

    @property
    def covolume(self) -> float:
        """Area |det M| of a fundamental cell."""
        return float(abs(np.linalg.det(self.generator)))

    def transformed(self, S: Any) -> "Lattice":
        """The lattice S M(Z^2) with the same truncation radius."""
        return Lattice(radius=self.radius, matrix=np.asarray(S) @ self.generator)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "rho": self.radius,
            "alpha": self.alpha,
            "beta": self.beta,
            "M": self.generator.tolist(),
        }
