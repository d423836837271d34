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

"""Tests for configuration handling and the model classes."""

import os
from unittest.mock import patch

import numpy as np
import pytest
from testing_framework import _assert_equals, assert_close

from blobkit.config import COMMANDS, THREADS_ENV, threads_from_env
from blobkit.errors import InvalidDimensionError, InvalidInputError, SchemaError
from blobkit.models import (
    Check,
    Command,
    CovarianceMatrix,
    FrameBounds,
    RunConfig,
    SampleGrid,
    Symbol,
    SymbolKind,
)


def test_run_config_from_dict() -> None:
    """Fields map onto the configuration; omitted ones take defaults."""
    config = RunConfig.from_dict(
        {
            "command": "frame",
            "hbar": 0.5,
            "grid": {"N": 256},
            "options": {"rho": 6.0},
            "assert": True,
        }
    )
    _assert_equals(Command.FRAME, config.command, "command")
    _assert_equals(256, config.grid_n, "grid_n")
    _assert_equals(12.0, config.domain, "domain")
    _assert_equals(True, config.assert_checks, "assert")
    _assert_equals(config.to_dict(), RunConfig.from_dict(config.to_dict()).to_dict())


@pytest.mark.parametrize(
    "data",
    [
        {"command": "frame", "colour": "red"},
        {"command": "frame", "grid": {"N": 256, "dx": 0.1}},
        {"command": "frame", "grid": {"N": 100}},
        {"command": "frame", "hbar": -1.0},
        {"command": "frame", "hbar": "small"},
        {"command": "teleport"},
        ["frame"],
    ],
    ids=[
        "unknown-field",
        "unknown-grid-field",
        "grid-not-power-of-two",
        "negative-hbar",
        "hbar-not-a-number",
        "unknown-command",
        "not-an-object",
    ],
)
def test_run_config_rejects(data: object) -> None:
    """Invalid configurations are schema errors."""
    with pytest.raises(SchemaError):
        RunConfig.from_dict(data)  # type: ignore[arg-type]


def test_every_command_has_a_spec() -> None:
    """The command table covers the Command enum exactly once."""
    _assert_equals(
        sorted(command.value for command in Command),
        sorted(spec.command.value for spec in COMMANDS),  # type: ignore[union-attr]
    )
    analysis = {spec.command: spec.analysis for spec in COMMANDS}
    _assert_equals(False, analysis[Command.SELFTEST], "selftest")


@pytest.mark.parametrize(
    "raw, expected",
    [("4", 4), ("", 1), ("many", 1), ("0", 1)],
)
def test_threads_from_env(raw: str, expected: int) -> None:
    """The thread cap falls back to 1 for missing or invalid values."""
    with patch.dict(os.environ, {THREADS_ENV: raw}):
        _assert_equals(expected, threads_from_env())


def test_threads_default_when_unset() -> None:
    """No variable means a single thread."""
    with patch.dict(os.environ, clear=True):
        _assert_equals(1, threads_from_env())


def test_check_constructors() -> None:
    """at_most compares against the tolerance; NaN never passes."""
    assert Check.at_most("error", 1e-12, 1e-10).passed
    assert not Check.at_most("error", 1e-3, 1e-10).passed
    assert not Check.at_most("error", float("nan"), 1e-10).passed
    flag = Check.holds("is_frame", False, ratio=0.0)
    _assert_equals({"ratio": 0.0}, flag.to_dict()["detail"], "detail")


def test_check_enrichment_copies() -> None:
    """with_run_name and with_command leave the original untouched."""
    check = Check.holds("rs2_holds", True)
    enriched = check.with_run_name("run").with_command("uncertainty")
    _assert_equals(None, check.run_name, "original run_name")
    _assert_equals("run", enriched.run_name, "run_name")
    _assert_equals("uncertainty", enriched.command, "command")


def test_symbol_from_dict() -> None:
    """Closed-form symbols are read from JSON and evaluated with broadcasting."""
    symbol = Symbol.from_dict(
        {"kind": "polynomial", "terms": [[2, 0, 1.0], [0, 1, 3.0]]}
    )
    _assert_equals(SymbolKind.POLYNOMIAL, symbol.kind, "kind")
    assert_close([4.0 + 3.0, 1.0 - 3.0], symbol([2.0, 1.0], [1.0, -1.0]), 1e-14)
    mixture = Symbol.from_dict(
        {"kind": "mixture", "components": [{"center": [1.0, 0.0]}, {"amplitude": 2.0}]}
    )
    assert_close(2.0 + np.exp(-1.0), mixture(0.0, 0.0), 1e-14)


@pytest.mark.parametrize(
    "data",
    [
        {"kind": "wavelet"},
        {"kind": "sampled"},
        {"kind": "gaussian", "sigma": 1.0},
        {"kind": "mixture", "components": [{"center": [0, 0], "width": 1}]},
        {"terms": []},
        {"kind": "polynomial", "terms": [[1]]},
        {"kind": "polynomial", "terms": "abc"},
        {"kind": "polynomial", "terms": [[0.5, 0, 1.0]]},
        {"kind": "mixture", "components": [1]},
        {"kind": "gaussian", "matrix": "x"},
        {"kind": "gaussian", "matrix": [[1.0, 0.0, 0.0]]},
        {"kind": "gaussian", "center": [0, "a"]},
        {"kind": "constant", "value": True},
        {"kind": "sine_product", "kx": "1"},
    ],
    ids=[
        "unknown-kind",
        "sampled",
        "unknown-field",
        "unknown-component",
        "no-kind",
        "short-term",
        "terms-not-a-list",
        "fractional-power",
        "component-not-an-object",
        "matrix-not-numeric",
        "matrix-not-square",
        "center-not-numeric",
        "boolean-value",
        "string-frequency",
    ],
)
def test_symbol_schema_errors(data: dict) -> None:
    """Unknown kinds, unknown fields and mistyped values are schema errors."""
    with pytest.raises(SchemaError):
        Symbol.from_dict(data)


def test_composed_and_shifted_symbols() -> None:
    """a o M and a(. - z0) evaluate through the original symbol."""
    symbol = Symbol.polynomial([[1, 0, 1.0]])
    rotated = symbol.composed([[0.0, 1.0], [-1.0, 0.0]])
    assert_close(2.0, rotated(5.0, 2.0), 0.0, "composed")
    assert_close(4.0, symbol.shifted((1.0, 0.0))(5.0, 2.0), 0.0, "shifted")


def test_sample_grid() -> None:
    """N dx dp = 2 pi hbar and N must be a power of two."""
    grid = SampleGrid.centered(hbar=0.5, N=64, domain=8.0)
    assert_close(2.0 * np.pi * 0.5, grid.N * grid.cell, 1e-12, "cell")
    assert_close(-8.0 * np.sqrt(0.5), grid.x[0], 1e-12, "start")
    _assert_equals(-32, int(round(grid.p[0] / grid.dp)), "p index")
    with pytest.raises(InvalidDimensionError):
        SampleGrid(N=96, dx=0.1)
    with pytest.raises(InvalidInputError):
        SampleGrid(N=64, dx=0.0)


def test_covariance_blocks() -> None:
    """Blocks follow the (x, p) ordering; odd sizes are rejected."""
    sigma = np.arange(16.0).reshape(4, 4)
    covariance = CovarianceMatrix(sigma=0.5 * (sigma + sigma.T))
    _assert_equals(2, covariance.n, "n")
    assert_close(covariance.sigma[:2, 2:], covariance.xp, 0.0, "xp")
    with pytest.raises(InvalidDimensionError):
        CovarianceMatrix(sigma=np.eye(3))


def test_frame_bounds_validation() -> None:
    """Rounding below zero is clipped; an inverted pair is invalid."""
    _assert_equals(0.0, FrameBounds(a=-1e-17, b=2.0).a, "clipped")
    with pytest.raises(InvalidInputError):
        FrameBounds(a=3.0, b=2.0)
