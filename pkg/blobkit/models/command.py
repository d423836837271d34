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

from enum import Enum


class Command(Enum):
    """A command understood by the ``blobkit`` command line.

    Attributes:
        FACTORIZE: Pre-Iwasawa factorization of a symplectic matrix.
        UNCERTAINTY: Uncertainty tests and capacity of a covariance matrix.
        WIGNER: Grid Wigner transform of a Gaussian state.
        QUANTIZE: Weyl or Toeplitz quantization of a symbol.
        FRAME: Frame bounds of a Gaussian Weyl-Heisenberg system.
        DENSITY: Density matrix from a phase-space probability density.
        SWEEP: Semiclassical deviation sweep over decreasing hbar.
        SELFTEST: The built-in invariant suite.
    """

    FACTORIZE = "factorize"
    UNCERTAINTY = "uncertainty"
    WIGNER = "wigner"
    QUANTIZE = "quantize"
    FRAME = "frame"
    DENSITY = "density"
    SWEEP = "sweep"
    SELFTEST = "selftest"
