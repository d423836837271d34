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

from ..errors import InvalidInputError
from .arrays import FloatArray


@dataclass
class SymplecticSpectrum:
    """Williamson (symplectic) eigenvalues of a positive-definite matrix.

    Attributes:
        eigenvalues: The n positive values, sorted ascending.
    """

    eigenvalues: FloatArray

    def __post_init__(self) -> None:
        """Sort the eigenvalues and check that they are positive.

        Raises:
            InvalidInputError: If any eigenvalue is not positive.
        """
        values = np.sort(np.asarray(self.eigenvalues, dtype=np.float64).reshape(-1))
        if values.size == 0 or np.any(values <= 0):
            raise InvalidInputError(f"symplectic eigenvalues must be > 0: {values}")
        self.eigenvalues = values

    @property
    def minimum(self) -> float:
        return float(self.eigenvalues[0])

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {"eigenvalues": self.eigenvalues.tolist()}
