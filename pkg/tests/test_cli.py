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

"""Tests for the blobkit command line.

Commands run in-process through ``main``; one test goes through
``python -m blobkit`` to cover the module entry point.
"""

import json
import subprocess
import sys
from pathlib import Path
from typing import Any, Dict, List

import numpy as np
import pytest
from testing_framework import _assert_equals

from blobkit.cli import EXIT_CHECKS_FAILED, EXIT_IO, EXIT_OK, EXIT_SCHEMA, main
from blobkit.symplectic import scaling_matrix, shear_matrix
from blobkit.utils import grid_io


def _write(path: Path, data: Any) -> str:
    path.write_text(json.dumps(data))
    return str(path)


def _run(capsys: pytest.CaptureFixture, argv: List[str]) -> Dict[str, Any]:
    """Run a command that succeeds and return its stdout report."""
    _assert_equals(EXIT_OK, main(argv), "exit code")
    return json.loads(capsys.readouterr().out)


def _checks(report: Dict[str, Any]) -> Dict[str, bool]:
    return {check["name"]: check["pass"] for check in report["checks"]}


def test_selftest_group(capsys: pytest.CaptureFixture) -> None:
    """A selected group of the invariant suite passes."""
    report = _run(capsys, ["selftest", "--only", "symplectic", "--grid-n", "128"])
    _assert_equals(True, report["pass"], "pass")
    _assert_equals(["symplectic"], report["config"]["options"]["groups"], "groups")
    assert report["checks"], "no checks ran"


def test_factorize(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """The pre-Iwasawa factors of V_P M_L reconstruct the matrix."""
    S = shear_matrix([[0.7]]) @ scaling_matrix([[1.8]])
    matrix = _write(tmp_path / "S.json", {"n": 1, "S": S.tolist()})
    report = _run(capsys, ["factorize", "--matrix", matrix])
    _assert_equals(
        {"reconstruction": True, "rotation_factor_unitary": True}, _checks(report)
    )
    assert "factors" in report["results"]


def test_violated_uncertainty_is_a_finding(
    tmp_path: Path, capsys: pytest.CaptureFixture
) -> None:
    """Analysis commands exit 0 on failing checks unless --assert is given."""
    sigma = _write(tmp_path / "sigma.json", {"n": 1, "sigma": [[0.25, 0], [0, 0.25]]})
    report = _run(capsys, ["uncertainty", "--sigma", sigma])
    _assert_equals(False, report["results"]["uncertainty"]["rs2_holds"], "rs2")
    _assert_equals(False, report["pass"], "pass")
    _assert_equals(
        EXIT_CHECKS_FAILED, main(["uncertainty", "--sigma", sigma, "--assert"])
    )
    assert "rs2_holds" in capsys.readouterr().err


def test_reports_are_deterministic(tmp_path: Path) -> None:
    """Two runs differ only in wall time."""
    record = {"n": 1, "sigma": [[0.5, 0.1], [0.1, 0.6]]}
    sigma = _write(tmp_path / "sigma.json", record)
    reports = []
    for name in ("first.json", "second.json"):
        out = tmp_path / name
        argv = ["uncertainty", "--sigma", sigma, "--out", str(out)]
        _assert_equals(EXIT_OK, main(argv))
        report = json.loads(out.read_text())
        del report["wall_time"]
        reports.append(report)
    _assert_equals(reports[0], reports[1])


def test_malformed_json(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """Parse errors exit 2 with the location."""
    path = tmp_path / "sigma.json"
    path.write_text('{"n": 1,\n "sigma": [[1, 0] [0, 1]]}')
    _assert_equals(EXIT_SCHEMA, main(["uncertainty", "--sigma", str(path)]))
    assert "line 2 column" in capsys.readouterr().err


def test_schema_errors(tmp_path: Path) -> None:
    """Unknown fields, missing inputs and wrong dimensions exit 2."""
    record = {"n": 1, "sigma": [[1, 0], [0, 1]], "x": 1}
    sigma = _write(tmp_path / "sigma.json", record)
    _assert_equals(EXIT_SCHEMA, main(["uncertainty", "--sigma", sigma]), "field")
    _assert_equals(EXIT_SCHEMA, main(["uncertainty"]), "missing input")
    state = _write(tmp_path / "state.json", {"n": 2, "X": np.eye(2).tolist()})
    _assert_equals(EXIT_SCHEMA, main(["wigner", "--state", state]), "dimension")


@pytest.mark.parametrize(
    "symbol",
    [
        {"kind": "polynomial", "terms": [[1]]},
        {"kind": "polynomial", "terms": "abc"},
        {"kind": "mixture", "components": [1]},
        {"kind": "gaussian", "matrix": "x"},
        {"kind": "gaussian", "center": [0, "a"]},
    ],
    ids=["short-term", "string-terms", "bare-component", "string-matrix", "center"],
)
def test_mistyped_symbol_exits_2(
    tmp_path: Path, capsys: pytest.CaptureFixture, symbol: Dict[str, Any]
) -> None:
    """Well-keyed symbols with wrong value types are schema errors."""
    path = _write(tmp_path / "symbol.json", symbol)
    argv = ["quantize", "--symbol", path, "--grid-n", "64"]
    _assert_equals(EXIT_SCHEMA, main(argv))
    assert "blobkit: error:" in capsys.readouterr().err


def test_missing_input_file(tmp_path: Path) -> None:
    """Unreadable inputs exit 3."""
    missing = str(tmp_path / "missing.json")
    _assert_equals(EXIT_IO, main(["uncertainty", "--sigma", missing]))


def test_bad_flag_values_exit_2() -> None:
    """argparse rejects malformed hbar lists."""
    with pytest.raises(SystemExit) as error:
        main(["sweep", "--symbol", "a.json", "--hbars", "1,-2"])
    _assert_equals(2, error.value.code)


def test_config_file(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """A JSON config supplies inputs and settings; flags override it."""
    sigma = _write(tmp_path / "sigma.json", {"n": 1, "sigma": [[1, 0], [0, 1]]})
    config = _write(
        tmp_path / "run.json",
        {"command": "uncertainty", "hbar": 4.0, "inputs": {"sigma": sigma}},
    )
    report = _run(capsys, ["uncertainty", "--config", config, "--hbar", "2.0"])
    _assert_equals(2.0, report["config"]["hbar"], "hbar")
    _assert_equals(True, report["results"]["uncertainty"]["saturated"], "saturated")
    _assert_equals(EXIT_SCHEMA, main(["frame", "--config", config]), "command")


def test_wigner_with_csv_artifact(
    tmp_path: Path, capsys: pytest.CaptureFixture
) -> None:
    """The grid transform of a Gaussian matches its closed form."""
    state = _write(tmp_path / "state.json", {"n": 1, "X": [[2.0]], "Y": [[0.5]]})
    csv = tmp_path / "wigner.csv"
    argv = ["wigner", "--state", state, "--grid-n", "128", "--save", str(csv)]
    report = _run(capsys, argv)
    assert report["results"]["max_error"] <= 1e-6
    lines = csv.read_text().splitlines()
    _assert_equals("x,p,re,im", lines[0], "header")
    _assert_equals(128 * 128 + 1, len(lines), "rows")


def test_weyl_quantization_artifact(
    tmp_path: Path, capsys: pytest.CaptureFixture
) -> None:
    """Weyl operators are saved as BLB1 files labelled with their route."""
    record = {"kind": "gaussian", "matrix": [[1, 0], [0, 1]]}
    symbol = _write(tmp_path / "a.json", record)
    out = tmp_path / "op.blb"
    argv = ["quantize", "--symbol", symbol, "--grid-n", "64", "--save", str(out)]
    report = _run(capsys, argv)
    _assert_equals({"hermitian": True}, _checks(report))
    _assert_equals("weyl", grid_io.read_grid(out).label, "label")


def test_toeplitz_quantization(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """The direct Toeplitz route agrees with the Weyl route."""
    symbol = _write(
        tmp_path / "a.json", {"kind": "gaussian", "center": [0.5, 0.0], "amplitude": 2}
    )
    argv = ["quantize", "--symbol", symbol, "--mode", "toeplitz"]
    report = _run(capsys, argv + ["--grid-n", "128", "--spacing", "0.25"])
    _assert_equals(
        {"weyl_route_agreement": True, "hermitian": True}, _checks(report)
    )
    _assert_equals("toeplitz", report["results"]["label"], "label")


def test_density(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """A Gaussian probability density gives a state with unit trace."""
    mu = _write(
        tmp_path / "mu.json",
        {
            "kind": "gaussian",
            "center": [0.5, -0.3],
            "matrix": [[0.5, 0], [0, 0.5]],
            "amplitude": 1.0 / (2.0 * np.pi),
        },
    )
    argv = ["density", "--mu", mu, "--grid-n", "128", "--spacing", "0.25"]
    report = _run(capsys, argv)
    _assert_equals(True, report["pass"], "pass")
    assert set(report["results"]["traces"]) == {"matrix", "convolution", "fourier"}


def test_frame(capsys: pytest.CaptureFixture) -> None:
    """The redundancy-two Gaussian system is a frame with an exact dual."""
    argv = ["frame", "--grid-n", "256", "--domain", "16", "--rho", "12"]
    report = _run(capsys, argv)
    _assert_equals({"is_frame": True, "dual_reconstruction": True}, _checks(report))
    assert abs(report["results"]["density"] - 0.5) <= 1e-12


def test_sweep(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """The smoothing deviation decreases with hbar."""
    symbol = _write(tmp_path / "a.json", {"kind": "sine_product", "kx": 1, "kp": 1})
    csv = tmp_path / "sweep.csv"
    argv = ["sweep", "--symbol", symbol, "--hbars", "1,0.25", "--grid-n", "256"]
    report = _run(capsys, argv + ["--save", str(csv)])
    _assert_equals({"deviation_decreasing": True}, _checks(report))
    _assert_equals(3, len(csv.read_text().splitlines()), "csv rows")


def test_module_entry_point(tmp_path: Path) -> None:
    """python -m blobkit runs the command line."""
    out = tmp_path / "report.json"
    result = subprocess.run(
        [
            sys.executable,
            "-m",
            "blobkit",
            "selftest",
            "--only",
            "symplectic",
            "--grid-n",
            "64",
            "--out",
            str(out),
        ],
        capture_output=True,
        text=True,
        check=False,
    )
    _assert_equals(0, result.returncode, result.stderr)
    _assert_equals(True, json.loads(out.read_text())["pass"], "pass")
