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

"""Tests for the JSON, BLB1 and CSV file helpers."""

import json
from pathlib import Path

import numpy as np
import pytest
from testing_framework import _assert_equals, assert_close, gaussian, small_grid

from blobkit.errors import SchemaError
from blobkit.models import DiscretizedOperator, SweepPoint
from blobkit.phasespace import wigner
from blobkit.utils import grid_io


def test_state_file_keeps_samples_and_grid(tmp_path: Path) -> None:
    """BLB1 stores complex samples with the grid header."""
    grid = small_grid(hbar=0.5, N=64)
    state = gaussian(grid, X=1.5, Y=0.3, center=(0.2, -0.1))
    path = tmp_path / "state.blb"
    grid_io.write_state(path, state, label="psi")
    stored = grid_io.read_grid(path)
    _assert_equals("psi", stored.label, "label")
    header = stored.header
    _assert_equals((64, 1, True), (header["Nx"], header["Np"], header["complex"]))
    assert_close(grid.dx, stored.header["dx"], 0.0, "dx")
    assert_close(grid.start, stored.header["x0"], 0.0, "x0")
    assert_close(state.values, stored.values, 0.0, "values")


def test_phase_space_file_is_two_dimensional(tmp_path: Path) -> None:
    """Real phase-space grids keep their shape."""
    grid = small_grid(N=32)
    transform = wigner(gaussian(grid))
    path = tmp_path / "wigner.blb"
    grid_io.write_phase_space(path, transform, label="wigner")
    stored = grid_io.read_grid(path)
    _assert_equals((32, 32), stored.values.shape, "shape")
    _assert_equals(False, stored.header["complex"], "complex")
    assert_close(transform.values, stored.values, 0.0)


def test_operator_file_carries_its_provenance(tmp_path: Path) -> None:
    """The label of an operator is its provenance."""
    grid = small_grid(N=16)
    operator = DiscretizedOperator(grid, np.identity(16), label="weyl")
    path = tmp_path / "op.blb"
    grid_io.write_operator(path, operator)
    _assert_equals("weyl", grid_io.read_grid(path).label)


def test_foreign_and_truncated_files_are_rejected(tmp_path: Path) -> None:
    """Wrong magic or payload size is a schema error."""
    foreign = tmp_path / "foreign.blb"
    foreign.write_bytes(b"NOPE" + bytes(64))
    with pytest.raises(SchemaError):
        grid_io.read_grid(foreign)
    path = tmp_path / "state.blb"
    grid_io.write_state(path, gaussian(small_grid(N=16)))
    path.write_bytes(path.read_bytes()[:-8])
    with pytest.raises(SchemaError):
        grid_io.read_grid(path)


def test_malformed_json_reports_its_location(tmp_path: Path) -> None:
    """Parse errors name the line and column."""
    path = tmp_path / "bad.json"
    path.write_text('{\n  "n": 1,\n  "S": [[1, 0], [0, 1]\n}\n')
    with pytest.raises(SchemaError, match="line 4 column 1"):
        grid_io.read_json(path)


def test_missing_json_is_an_os_error(tmp_path: Path) -> None:
    """Unreadable files surface as OSError."""
    with pytest.raises(OSError):
        grid_io.read_json(tmp_path / "missing.json")


def test_matrix_records() -> None:
    """Matrices carry n and must have shape 2n x 2n."""
    record = {"n": 1, "S": [[2.0, 0.0], [0.0, 0.5]]}
    assert_close(np.diag([2.0, 0.5]), grid_io.matrix_from_json(record, "S"), 0.0)
    with pytest.raises(SchemaError, match="2x2"):
        grid_io.matrix_from_json({"n": 1, "S": [[1.0]]}, "S")
    with pytest.raises(SchemaError, match="unknown fields"):
        grid_io.matrix_from_json({**record, "note": "x"}, "S")
    with pytest.raises(SchemaError):
        grid_io.matrix_from_json({"n": 1, "S": "identity"}, "S")
    with pytest.raises(SchemaError, match="positive integer"):
        grid_io.matrix_from_json({**record, "n": "one"}, "S")


def test_canonical_json_text() -> None:
    """Keys are sorted and numpy and complex values are converted."""
    text = grid_io.to_json({"b": np.float64(1.5), "a": np.arange(2), "c": 1 + 2j})
    _assert_equals(
        {"a": [0, 1], "b": 1.5, "c": {"im": 2.0, "re": 1.0}}, json.loads(text)
    )
    assert text.index('"a"') < text.index('"b"') < text.index('"c"')
    assert text.endswith("\n")


def test_sweep_csv(tmp_path: Path) -> None:
    """One hbar, deviation row per sweep point."""
    path = tmp_path / "sweep.csv"
    points = [SweepPoint(hbar=1.0, deviation=0.5), SweepPoint(hbar=0.5, deviation=0.25)]
    grid_io.write_sweep_csv(path, points)
    lines = path.read_text().splitlines()
    _assert_equals("hbar,deviation", lines[0], "header")
    _assert_equals(["1,0.5", "0.5,0.25"], lines[1:], "rows")


def test_coefficient_csv(tmp_path: Path) -> None:
    """Coefficient rows hold the lattice index, point and complex value."""
    path = tmp_path / "coefficients.csv"
    grid_io.write_coefficients_csv(path, [[0.0, 0.0], [1.0, -1.0]], [1.0, 0.5j])
    lines = path.read_text().splitlines()
    _assert_equals("index,x,p,re,im", lines[0], "header")
    _assert_equals("1,1,-1,0,0.5", lines[2], "row")
