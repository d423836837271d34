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
from .arrays import FloatArray, as_float_matrix, as_float_vector


@dataclass
class CovarianceMatrix:
    """Second moments of a phase-space distribution.

    Symmetry is checked by the operations that need it, so that a
    non-symmetric input reaches them and is reported as invalid input.

    Attributes:
        sigma: The 2n x 2n matrix [[D(x,x), D(x,p)], [D(p,x), D(p,p)]].
        mean: First moments <z>. Defaults to the origin.
    """

    sigma: FloatArray
    mean: Optional[FloatArray] = None

    def __post_init__(self) -> None:
        """Coerce the arrays and check that the dimension is even.

        Raises:
            InvalidDimensionError: If sigma is not square with even dimension.
        """
        self.sigma = as_float_matrix(self.sigma, "sigma")
        if self.sigma.shape[0] == 0 or self.sigma.shape[0] % 2:
            raise InvalidDimensionError(
                f"covariance matrices have even dimension, got {self.sigma.shape}"
            )
        if self.mean is None:
            self.mean = np.zeros(self.sigma.shape[0])
        self.mean = as_float_vector(self.mean, "mean", self.sigma.shape[0])

    @property
    def n(self) -> int:
        return int(self.sigma.shape[0] // 2)

    @property
    def xx(self) -> FloatArray:
        return self.sigma[: self.n, : self.n]

    @property
    def xp(self) -> FloatArray:
        return self.sigma[: self.n, self.n :]

    @property
    def px(self) -> FloatArray:
        return self.sigma[self.n :, : self.n]

    @property
    def pp(self) -> FloatArray:
        return self.sigma[self.n :, self.n :]

    def scaled(self, factor: float) -> "CovarianceMatrix":
        """Return the covariance of the distribution dilated by sqrt(factor)."""
        return CovarianceMatrix(sigma=factor * self.sigma, mean=self.mean)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        assert self.mean is not None
        return {"n": self.n, "sigma": self.sigma.tolist(), "mean": self.mean.tolist()}
