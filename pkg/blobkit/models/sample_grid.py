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
from .arrays import FloatArray, require_positive


@dataclass
class SampleGrid:
    """A uniform position grid with its induced momentum grid.

    Positions are x_j = x0 + j dx for j = 0..N-1; momenta are p_m = m dp for
    m = -N/2..N/2-1 with dp = 2 pi hbar / (N dx), so N dx dp = 2 pi hbar.

    Attributes:
        N: Number of points, a power of two.
        dx: Position spacing.
        hbar: Reduced Planck constant.
        x0: Left endpoint. Defaults to -N dx / 2 (grid centered on 0).
    """

    N: int
    dx: float
    hbar: float = 1.0
    x0: Optional[float] = None

    def __post_init__(self) -> None:
        """Validate the grid parameters.

        Raises:
            InvalidDimensionError: If N is not a power of two (N >= 2).
            InvalidInputError: If dx or hbar is not positive.
        """
        self.N = int(self.N)
        if self.N < 2 or self.N & (self.N - 1):
            raise InvalidDimensionError(f"N must be a power of two, got {self.N}")
        self.dx = require_positive(self.dx, "dx")
        self.hbar = require_positive(self.hbar, "hbar")
        if self.x0 is None:
            self.x0 = -0.5 * self.N * self.dx
        self.x0 = float(self.x0)

    @staticmethod
    def centered(
        hbar: float = 1.0, N: int = 512, domain: float = 12.0
    ) -> "SampleGrid":
        """Grid covering [-domain sqrt(hbar), domain sqrt(hbar))."""
        width = 2.0 * domain * np.sqrt(require_positive(hbar, "hbar"))
        return SampleGrid(N=N, dx=width / N, hbar=hbar)

    @property
    def start(self) -> float:
        assert self.x0 is not None
        return self.x0

    @property
    def dp(self) -> float:
        return float(2.0 * np.pi * self.hbar / (self.N * self.dx))

    @property
    def x(self) -> FloatArray:
        return self.start + self.dx * np.arange(self.N)

    @property
    def p(self) -> FloatArray:
        return self.dp * np.arange(-self.N // 2, self.N // 2)

    @property
    def cell(self) -> float:
        """Phase-space area dx dp of one grid cell."""
        return self.dx * self.dp

    def matches(self, other: "SampleGrid") -> bool:
        """Whether two grids sample the same points at the same hbar."""
        return (
            self.N == other.N
            and np.isclose(self.dx, other.dx, rtol=1e-12, atol=0.0)
            and np.isclose(self.start, other.start, rtol=1e-12, atol=1e-14)
            and np.isclose(self.hbar, other.hbar, rtol=1e-12, atol=0.0)
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "N": self.N,
            "dx": self.dx,
            "dp": self.dp,
            "x0": self.start,
            "hbar": self.hbar,
        }
