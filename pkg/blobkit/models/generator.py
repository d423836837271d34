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
from typing import Any, Dict, Optional, Union

import numpy as np

from ..errors import InvalidDimensionError, InvalidInputError
from .arrays import FloatArray
from .generator_kind import GeneratorKind


@dataclass
class Generator:
    """A single generator of Sp(n) (or a translation) with its parameter.

    Attributes:
        kind: Which generator, either as a string or GeneratorKind enum.
        n: Degrees of freedom the generator acts on.
        parameter: P for shears, L for scalings, z0 for translations and
            None for the rotation J.
    """

    kind: Union[str, GeneratorKind]
    n: int = 1
    parameter: Optional[FloatArray] = None

    def __post_init__(self) -> None:
        """Normalize the kind and validate the parameter shape.

        Raises:
            ValueError: If the kind string is not a valid GeneratorKind.
            InvalidDimensionError: If the parameter has the wrong shape.
            InvalidInputError: If a required parameter is missing.
        """
        if isinstance(self.kind, str):
            self.kind = GeneratorKind(self.kind)
        if self.n < 1:
            raise InvalidDimensionError(f"n must be >= 1, got {self.n}")
        if self.kind == GeneratorKind.ROTATION:
            self.parameter = None
            return
        if self.parameter is None:
            raise InvalidInputError(f"{self.kind.value} needs a parameter")
        value = np.asarray(self.parameter, dtype=np.float64)
        expected = (
            (2 * self.n,)
            if self.kind == GeneratorKind.TRANSLATION
            else (self.n, self.n)
        )
        if value.size == int(np.prod(expected)):
            value = value.reshape(expected)
        if value.shape != expected:
            raise InvalidDimensionError(
                f"{self.kind.value} parameter must have shape {expected}, "
                f"got {value.shape}"
            )
        self.parameter = value

    @property
    def required_parameter(self) -> FloatArray:
        """The parameter of a shear, scaling or translation.

        Raises:
            InvalidInputError: If the generator carries no parameter.
        """
        if self.parameter is None:
            kind = GeneratorKind(self.kind).value
            raise InvalidInputError(f"{kind} needs a parameter")
        return self.parameter

    @staticmethod
    def shear(P: Any) -> "Generator":
        """V_P for a symmetric matrix P."""
        matrix = np.atleast_2d(np.asarray(P, dtype=np.float64))
        return Generator(GeneratorKind.SHEAR, matrix.shape[0], matrix)

    @staticmethod
    def scaling(L: Any) -> "Generator":
        """M_L for an invertible matrix L."""
        matrix = np.atleast_2d(np.asarray(L, dtype=np.float64))
        return Generator(GeneratorKind.SCALING, matrix.shape[0], matrix)

    @staticmethod
    def rotation(n: int = 1) -> "Generator":
        """The standard form J."""
        return Generator(GeneratorKind.ROTATION, n)

    @staticmethod
    def translation(z0: Any) -> "Generator":
        """T(z0) for a phase-space point z0."""
        vector = np.asarray(z0, dtype=np.float64).reshape(-1)
        return Generator(GeneratorKind.TRANSLATION, vector.size // 2, vector)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        assert isinstance(self.kind, GeneratorKind)
        return {
            "kind": self.kind.value,
            "n": self.n,
            "parameter": None if self.parameter is None else self.parameter.tolist(),
        }
