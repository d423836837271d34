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

from .arrays import ComplexArray, FloatArray
from .sampled_state import SampledState


@dataclass
class GaborExpansion:
    """Coefficients of a state in a Gabor system and its reconstruction.

    Attributes:
        points: Lattice points, shape (K, 2), in enumeration order.
        coefficients: (psi | phi_lambda) for each point.
        ambiguity_coefficients: 2 pi hbar Amb(psi, phi)(lambda) per point.
        reconstruction: Canonical-dual reconstruction of psi.
        relative_error: Relative L2 reconstruction error.
        ambiguity_agreement: Max deviation between the two coefficient forms.
    """

    points: FloatArray
    coefficients: ComplexArray
    ambiguity_coefficients: ComplexArray
    reconstruction: SampledState
    relative_error: float
    ambiguity_agreement: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "points": len(self.points),
            "relative_error": self.relative_error,
            "ambiguity_agreement": self.ambiguity_agreement,
        }
