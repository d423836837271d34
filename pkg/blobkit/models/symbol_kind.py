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


class SymbolKind(Enum):
    """The representation behind a phase-space symbol.

    Attributes:
        CONSTANT: a(z) = value.
        POLYNOMIAL: a(x, p) = sum of c x^i p^j over the listed terms.
        GAUSSIAN: a(z) = amplitude exp(-M(z - c).(z - c)).
        MIXTURE: Sum of GAUSSIAN components.
        SINE_PRODUCT: a(x, p) = amplitude sin(kx x) sin(kp p).
        SAMPLED: Values on a phase-space grid, defined only at grid points.
        CALLABLE: A vectorized Python function of (x, p).
    """

    CONSTANT = "constant"
    POLYNOMIAL = "polynomial"
    GAUSSIAN = "gaussian"
    MIXTURE = "mixture"
    SINE_PRODUCT = "sine_product"
    SAMPLED = "sampled"
    CALLABLE = "callable"
