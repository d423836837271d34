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

from .arrays import FloatArray, as_float_matrix, as_float_vector


@dataclass
class WignerGaussian:
    """The closed-form Wigner function (pi hbar)^-n exp(-G(z-z0).(z-z0)/hbar).

    Attributes:
        G: Symmetric positive-definite symplectic 2n x 2n matrix.
        z0: Center.
        hbar: Reduced Planck constant.
    """

    G: FloatArray
    z0: FloatArray
    hbar: float

    def __post_init__(self) -> None:
        self.G = as_float_matrix(self.G, "G")
        self.z0 = as_float_vector(self.z0, "z0", self.G.shape[0])

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {"G": self.G.tolist(), "z0": self.z0.tolist(), "hbar": self.hbar}
