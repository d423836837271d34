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


class GeneratorKind(Enum):
    """A generator of the symplectic and metaplectic groups.

    Attributes:
        SHEAR: V_P = [[I, 0], [-P, I]] with P symmetric.
        SCALING: M_L = [[L^-1, 0], [0, L^T]] with L invertible.
        ROTATION: the standard form J.
        TRANSLATION: the phase-space translation T(z0).
    """

    SHEAR = "shear"
    SCALING = "scaling"
    ROTATION = "rotation"
    TRANSLATION = "translation"
