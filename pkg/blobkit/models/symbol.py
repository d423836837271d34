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

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Union

import numpy as np

from ..errors import InvalidDimensionError, InvalidInputError, SchemaError
from .arrays import as_float_matrix, as_float_vector
from .phase_space_function import PhaseSpaceFunction
from .symbol_kind import SymbolKind

_GAUSSIAN_KEYS = {"center", "matrix", "amplitude"}
_SCHEMA_KEYS = {
    SymbolKind.CONSTANT: {"value"},
    SymbolKind.POLYNOMIAL: {"terms"},
    SymbolKind.GAUSSIAN: _GAUSSIAN_KEYS,
    SymbolKind.MIXTURE: {"components"},
    SymbolKind.SINE_PRODUCT: {"kx", "kp", "amplitude"},
}


def _schema_number(value: Any, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{name} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise SchemaError(f"{name} must be finite, got {value!r}")
    return float(value)


def _schema_gaussian(data: Any, name: str) -> Dict[str, Any]:
    """Validated copy of the center/matrix/amplitude fields that are present."""
    if not isinstance(data, dict):
        raise SchemaError(f"{name} must be an object, got {data!r}")
    unknown = set(data) - _GAUSSIAN_KEYS
    if unknown:
        raise SchemaError(f"unknown symbol fields: {sorted(unknown)}")
    parameters: Dict[str, Any] = {}
    try:
        if "center" in data:
            center = as_float_vector(data["center"], f"{name}.center", 2)
            parameters["center"] = center.tolist()
        if "matrix" in data:
            matrix = as_float_matrix(data["matrix"], f"{name}.matrix")
            if matrix.shape != (2, 2):
                raise SchemaError(f"{name}.matrix must be 2 x 2, got {matrix.shape}")
            parameters["matrix"] = matrix.tolist()
    except (InvalidInputError, InvalidDimensionError) as error:
        raise SchemaError(str(error)) from error
    if "amplitude" in data:
        parameters["amplitude"] = _schema_number(data["amplitude"], f"{name}.amplitude")
    return parameters


def _schema_terms(terms: Any) -> List[List[float]]:
    if not isinstance(terms, list):
        raise SchemaError(f"terms must be a list of [i, j, c] triples, got {terms!r}")
    triples = []
    for index, term in enumerate(terms):
        if not isinstance(term, list) or len(term) != 3:
            raise SchemaError(f"terms[{index}] must be [i, j, c], got {term!r}")
        i, j, coefficient = (
            _schema_number(value, f"terms[{index}]") for value in term
        )
        if i < 0 or j < 0 or not i.is_integer() or not j.is_integer():
            raise SchemaError(f"terms[{index}] powers must be nonnegative integers")
        triples.append([int(i), int(j), coefficient])
    return triples


def _gaussian(params: Dict[str, Any], x: Any, p: Any) -> Any:
    center = np.asarray(params.get("center", [0.0, 0.0]), dtype=np.float64)
    matrix = np.asarray(params.get("matrix", np.eye(2)), dtype=np.float64)
    dx = x - center[0]
    dp = p - center[1]
    form = (
        matrix[0, 0] * dx * dx
        + (matrix[0, 1] + matrix[1, 0]) * dx * dp
        + matrix[1, 1] * dp * dp
    )
    return params.get("amplitude", 1.0) * np.exp(-form)


@dataclass
class Symbol:
    """A phase-space function to be quantized (n = 1).

    Closed-form symbols are evaluable at arbitrary (x, p); sampled symbols
    only at the points of their grid.

    Attributes:
        kind: Representation, either as a string or SymbolKind enum.
        parameters: Coefficients of a closed-form symbol.
        samples: Grid values for SAMPLED symbols.
        function: Vectorized callable for CALLABLE symbols.
    """

    kind: Union[str, SymbolKind]
    parameters: Dict[str, Any] = field(default_factory=dict)
    samples: Optional[PhaseSpaceFunction] = None
    function: Optional[Callable[[Any, Any], Any]] = None

    def __post_init__(self) -> None:
        """Normalize the kind and check that its payload is present.

        Raises:
            ValueError: If the kind string is not a valid SymbolKind.
            InvalidInputError: If the payload for the kind is missing.
        """
        if isinstance(self.kind, str):
            self.kind = SymbolKind(self.kind)
        if self.kind == SymbolKind.SAMPLED and self.samples is None:
            raise InvalidInputError("sampled symbols need samples")
        if self.kind == SymbolKind.CALLABLE and self.function is None:
            raise InvalidInputError("callable symbols need a function")

    def __call__(self, x: Any, p: Any) -> Any:
        """Evaluate the symbol with numpy broadcasting."""
        x = np.asarray(x, dtype=np.float64)
        p = np.asarray(p, dtype=np.float64)
        match self.kind:
            case SymbolKind.CONSTANT:
                value = self.parameters.get("value", 1.0)
                return np.full(np.broadcast(x, p).shape, value)
            case SymbolKind.POLYNOMIAL:
                total: Any = np.zeros(np.broadcast(x, p).shape)
                for i, j, coefficient in self.parameters.get("terms", []):
                    total = total + coefficient * x ** int(i) * p ** int(j)
                return total
            case SymbolKind.GAUSSIAN:
                return _gaussian(self.parameters, x, p)
            case SymbolKind.MIXTURE:
                total = np.zeros(np.broadcast(x, p).shape)
                for component in self.parameters.get("components", []):
                    total = total + _gaussian(component, x, p)
                return total
            case SymbolKind.SINE_PRODUCT:
                amplitude = self.parameters.get("amplitude", 1.0)
                kx = self.parameters.get("kx", 1.0)
                kp = self.parameters.get("kp", 1.0)
                return amplitude * np.sin(kx * x) * np.sin(kp * p)
            case SymbolKind.SAMPLED:
                return self._lookup(x, p)
            case _:
                assert self.function is not None
                return self.function(x, p)

    def _lookup(self, x: Any, p: Any) -> Any:
        assert self.samples is not None
        grid = self.samples
        ix = (x - grid.x[0]) / grid.dx
        ip = (p - grid.p[0]) / grid.dp
        jx = np.rint(ix).astype(int)
        jp = np.rint(ip).astype(int)
        off_grid = (np.abs(ix - jx) > 1e-6) | (np.abs(ip - jp) > 1e-6)
        outside = (jx < 0) | (jx >= grid.x.size) | (jp < 0) | (jp >= grid.p.size)
        if np.any(off_grid | outside):
            raise InvalidInputError(
                "sampled symbol is undefined at the required points"
            )
        return grid.values[jx, jp]

    @property
    def is_closed_form(self) -> bool:
        return self.kind != SymbolKind.SAMPLED

    def composed(self, matrix: Any) -> "Symbol":
        """Return the symbol z -> a(M z) for a 2 x 2 matrix M."""
        m = np.asarray(matrix, dtype=np.float64)

        def _composed(x: Any, p: Any) -> Any:
            return self(m[0, 0] * x + m[0, 1] * p, m[1, 0] * x + m[1, 1] * p)

        return Symbol(SymbolKind.CALLABLE, function=_composed)

    def shifted(self, z0: Any) -> "Symbol":
        """Return the symbol z -> a(z - z0)."""
        x0, p0 = (float(v) for v in np.asarray(z0, dtype=np.float64).reshape(2))
        return Symbol(SymbolKind.CALLABLE, function=lambda x, p: self(x - x0, p - p0))

    @staticmethod
    def constant(value: float = 1.0) -> "Symbol":
        return Symbol(SymbolKind.CONSTANT, {"value": value})

    @staticmethod
    def polynomial(terms: List[List[float]]) -> "Symbol":
        """Polynomial from [i, j, c] triples meaning c x^i p^j."""
        return Symbol(SymbolKind.POLYNOMIAL, {"terms": [list(t) for t in terms]})

    @staticmethod
    def gaussian(
        center: Any = (0.0, 0.0),
        matrix: Any = ((1.0, 0.0), (0.0, 1.0)),
        amplitude: float = 1.0,
    ) -> "Symbol":
        return Symbol(
            SymbolKind.GAUSSIAN,
            {
                "center": np.asarray(center, dtype=np.float64).tolist(),
                "matrix": np.asarray(matrix, dtype=np.float64).tolist(),
                "amplitude": amplitude,
            },
        )

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> "Symbol":
        """Build a closed-form symbol from its JSON description.

        Raises:
            SchemaError: If the kind is unknown, a field is unexpected or a
                value has the wrong type or shape.
        """
        if not isinstance(data, dict) or "kind" not in data:
            raise SchemaError("symbol must be an object with a 'kind' field")
        try:
            kind = SymbolKind(data["kind"])
        except (TypeError, ValueError) as error:
            raise SchemaError(f"unknown symbol kind {data['kind']!r}") from error
        if kind not in _SCHEMA_KEYS:
            raise SchemaError(f"symbol kind {kind.value!r} cannot be read from JSON")
        parameters = {k: v for k, v in data.items() if k != "kind"}
        unknown = set(parameters) - _SCHEMA_KEYS[kind]
        if unknown:
            raise SchemaError(f"unknown symbol fields: {sorted(unknown)}")
        match kind:
            case SymbolKind.POLYNOMIAL:
                parameters["terms"] = _schema_terms(parameters.get("terms", []))
            case SymbolKind.GAUSSIAN:
                parameters = _schema_gaussian(parameters, "symbol")
            case SymbolKind.MIXTURE:
                components = parameters.get("components", [])
                if not isinstance(components, list):
                    raise SchemaError("components must be a list of gaussians")
                parameters["components"] = [
                    _schema_gaussian(component, f"components[{index}]")
                    for index, component in enumerate(components)
                ]
            case _:
                parameters = {
                    key: _schema_number(value, key)
                    for key, value in parameters.items()
                }
        return Symbol(kind, parameters)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        assert isinstance(self.kind, SymbolKind)
        if self.kind == SymbolKind.SAMPLED:
            assert self.samples is not None
            return {"kind": self.kind.value, "grid": self.samples.to_dict()}
        return {"kind": self.kind.value, **self.parameters}
