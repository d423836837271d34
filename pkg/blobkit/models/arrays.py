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

"""Array aliases and coercion helpers shared by the model dataclasses."""

from typing import Any

import numpy as np
import numpy.typing as npt

from ..errors import InvalidDimensionError, InvalidInputError

FloatArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]


def _as_float_array(value: Any, name: str) -> FloatArray:
    try:
        return np.asarray(value, dtype=np.float64)
    except (TypeError, ValueError) as error:
        raise InvalidInputError(f"{name} must be numeric: {error}") from error


def as_float_matrix(value: Any, name: str, *, square: bool = True) -> FloatArray:
    """Coerce a value to a finite 2-D float64 array."""
    matrix = np.atleast_2d(_as_float_array(value, name))
    if matrix.ndim != 2:
        raise InvalidDimensionError(f"{name} must be a matrix, got {matrix.ndim}-D")
    if square and matrix.shape[0] != matrix.shape[1]:
        raise InvalidDimensionError(f"{name} must be square, got {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise InvalidInputError(f"{name} has non-finite entries")
    return matrix


def as_float_vector(value: Any, name: str, size: int) -> FloatArray:
    """Coerce a value to a finite float64 vector of the given size."""
    vector = _as_float_array(value, name).reshape(-1)
    if vector.size != size:
        raise InvalidDimensionError(
            f"{name} must have {size} entries, got {vector.size}"
        )
    if not np.all(np.isfinite(vector)):
        raise InvalidInputError(f"{name} has non-finite entries")
    return vector


def require_positive(value: float, name: str) -> float:
    """Return value as float, raising if it is not a positive finite number."""
    try:
        number = float(value)
    except (TypeError, ValueError) as error:
        raise InvalidInputError(f"{name} must be a number, got {value!r}") from error
    if not np.isfinite(number) or number <= 0:
        raise InvalidInputError(f"{name} must be positive, got {value}")
    return number
