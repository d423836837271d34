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

from ..errors import InvalidInputError
from .lattice import Lattice
from .sampled_state import SampledState


@dataclass
class WHSystem:
    """A Weyl-Heisenberg (Gabor) system: translates of a window over a lattice.

    Attributes:
        window: Unit-norm window on the working grid.
        lattice: Lattice of translations.
    """

    window: SampledState
    lattice: Lattice

    def __post_init__(self) -> None:
        """Check that the window has unit norm.

        Raises:
            InvalidInputError: If the window norm differs from 1 by over 1e-8.
        """
        if abs(self.window.norm - 1.0) > 1e-8:
            raise InvalidInputError(
                f"window must have unit norm, got {self.window.norm:.12f}"
            )

    @property
    def hbar(self) -> float:
        return self.window.grid.hbar

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {"hbar": self.hbar, "lattice": self.lattice.to_dict()}
