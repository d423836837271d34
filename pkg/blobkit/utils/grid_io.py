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

"""Readers and writers for blobkit files.

JSON inputs carry matrices as row-major arrays of arrays with an explicit
``n``. Grid data uses the little-endian BLB1 binary layout:

    magic b"BLB1" | Nx uint32 | Np uint32 | dx, dp, x0, hbar float64 |
    complex flag uint8 | label length uint16 | label utf-8 | samples float64

Complex samples are stored as interleaved (re, im) pairs in row-major order.
A sampled state has Np = 1.
"""

import json
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Sequence, Union

import numpy as np

from ..errors import SchemaError
from ..models import (
    DiscretizedOperator,
    FloatArray,
    PhaseSpaceFunction,
    SampledState,
    SweepPoint,
)

PathLike = Union[str, Path]

MAGIC = b"BLB1"
_HEADER = struct.Struct("<4sIIddddBH")


@dataclass
class GridFile:
    """Decoded contents of a BLB1 file.

    Attributes:
        header: Nx, Np, dx, dp, x0, hbar and the complex flag.
        label: Provenance label.
        values: Samples with shape (Nx,) when Np == 1, else (Nx, Np).
    """

    header: Dict[str, Any]
    label: str
    values: Any


def read_json(path: PathLike) -> Any:
    """Load a JSON file, reporting parse errors with their location.

    Raises:
        SchemaError: If the file is not valid JSON.
        OSError: If the file cannot be read.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise SchemaError(
            f"{path}: line {error.lineno} column {error.colno}: {error.msg}"
        ) from error


def write_json(path: PathLike, data: Any) -> None:
    """Write JSON with sorted keys so equal payloads give equal bytes."""
    Path(path).write_text(to_json(data), encoding="utf-8")


def matrix_from_json(data: Any, key: str, *, allowed: tuple = ()) -> FloatArray:
    """Extract an n-dimensional square matrix record ``{"n": n, key: [[...]]}``.

    Raises:
        SchemaError: If fields are missing or unknown, or the shape does not
            match n.
    """
    if not isinstance(data, dict):
        raise SchemaError(f"expected an object with fields 'n' and '{key}'")
    unknown = set(data) - {"n", key, *allowed}
    if unknown:
        raise SchemaError(f"unknown fields: {sorted(unknown)}")
    if "n" not in data or key not in data:
        raise SchemaError(f"missing field 'n' or '{key}'")
    try:
        matrix = np.asarray(data[key], dtype=np.float64)
    except (TypeError, ValueError) as error:
        raise SchemaError(f"'{key}' must be an array of arrays of numbers") from error
    if isinstance(data["n"], bool) or not isinstance(data["n"], int) or data["n"] < 1:
        raise SchemaError(f"'n' must be a positive integer, got {data['n']!r}")
    size = 2 * data["n"]
    if matrix.shape != (size, size):
        raise SchemaError(
            f"'{key}' must be {size}x{size} for n={data['n']}, got {matrix.shape}"
        )
    return matrix


def _write_grid(
    path: PathLike,
    values: Any,
    *,
    dx: float,
    dp: float,
    x0: float,
    hbar: float,
    label: str = "",
) -> None:
    samples = np.asarray(values)
    shape = samples.shape if samples.ndim == 2 else (samples.size, 1)
    is_complex = np.iscomplexobj(samples)
    if is_complex:
        payload = np.stack([samples.real, samples.imag], axis=-1)
    else:
        payload = samples
    encoded = label.encode("utf-8")
    header = _HEADER.pack(
        MAGIC, shape[0], shape[1], dx, dp, x0, hbar, int(is_complex), len(encoded)
    )
    with open(path, "wb") as handle:
        handle.write(header)
        handle.write(encoded)
        handle.write(np.ascontiguousarray(payload, dtype="<f8").tobytes())


def write_state(path: PathLike, state: SampledState, label: str = "") -> None:
    """Write a sampled state as a BLB1 file."""
    grid = state.grid
    _write_grid(
        path,
        state.values,
        dx=grid.dx,
        dp=grid.dp,
        x0=grid.start,
        hbar=grid.hbar,
        label=label,
    )


def write_phase_space(
    path: PathLike, function: PhaseSpaceFunction, label: str = ""
) -> None:
    """Write a phase-space function as a BLB1 file."""
    _write_grid(
        path,
        function.values,
        dx=function.dx,
        dp=function.dp,
        x0=float(function.x[0]),
        hbar=function.hbar,
        label=label,
    )


def write_operator(path: PathLike, operator: DiscretizedOperator) -> None:
    """Write an operator matrix as a BLB1 file labelled with its provenance."""
    grid = operator.grid
    _write_grid(
        path,
        operator.matrix,
        dx=grid.dx,
        dp=grid.dp,
        x0=grid.start,
        hbar=grid.hbar,
        label=operator.label,
    )


def read_grid(path: PathLike) -> GridFile:
    """Read a BLB1 file.

    Raises:
        SchemaError: If the magic or payload size is wrong.
    """
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size or raw[:4] != MAGIC:
        raise SchemaError(f"{path}: not a BLB1 file")
    magic, nx, np_, dx, dp, x0, hbar, is_complex, label_size = _HEADER.unpack_from(
        raw
    )
    del magic
    offset = _HEADER.size
    label = raw[offset : offset + label_size].decode("utf-8")
    offset += label_size
    data = np.frombuffer(raw, dtype="<f8", offset=offset)
    expected = nx * np_ * (2 if is_complex else 1)
    if data.size != expected:
        raise SchemaError(f"{path}: expected {expected} samples, got {data.size}")
    if is_complex:
        values = data[0::2] + 1j * data[1::2]
    else:
        values = data.copy()
    values = values.reshape(nx) if np_ == 1 else values.reshape(nx, np_)
    header = {
        "Nx": nx,
        "Np": np_,
        "dx": dx,
        "dp": dp,
        "x0": x0,
        "hbar": hbar,
        "complex": bool(is_complex),
    }
    return GridFile(header=header, label=label, values=values)


def write_phase_space_csv(path: PathLike, function: PhaseSpaceFunction) -> None:
    """Write x, p, re, im rows for plotting."""
    xx, pp = np.meshgrid(function.x, function.p, indexing="ij")
    values = np.asarray(function.values, dtype=np.complex128)
    table = np.column_stack(
        [xx.ravel(), pp.ravel(), values.real.ravel(), values.imag.ravel()]
    )
    np.savetxt(path, table, delimiter=",", header="x,p,re,im", comments="")


def write_coefficients_csv(path: PathLike, points: Any, coefficients: Any) -> None:
    """Write lattice index, point and complex coefficient rows."""
    points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    coefficients = np.asarray(coefficients, dtype=np.complex128)
    table = np.column_stack(
        [
            np.arange(len(points)),
            points[:, 0],
            points[:, 1],
            coefficients.real,
            coefficients.imag,
        ]
    )
    np.savetxt(
        path,
        table,
        delimiter=",",
        header="index,x,p,re,im",
        comments="",
        fmt=["%d", "%.17g", "%.17g", "%.17g", "%.17g"],
    )


def write_sweep_csv(path: PathLike, points: Sequence[SweepPoint]) -> None:
    """Write hbar, deviation rows of a semiclassical sweep."""
    table = np.array([[point.hbar, point.deviation] for point in points])
    np.savetxt(
        path,
        table.reshape(-1, 2),
        delimiter=",",
        header="hbar,deviation",
        comments="",
        fmt="%.17g",
    )


def _jsonable(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def to_json(data: Any) -> str:
    """Canonical JSON text: sorted keys, numpy and complex values converted."""
    return json.dumps(data, sort_keys=True, indent=2, default=_jsonable) + "\n"
