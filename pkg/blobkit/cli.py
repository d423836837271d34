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

"""Command-line entry point of blobkit.

Every command reads its JSON inputs, runs the matching module operation on
the configured grid and writes a JSON report. Checks are logged through a
ReportTracker while the command runs.

Exit codes: 0 on success, 1 when checks fail under ``selftest`` or
``--assert``, 2 on schema or input errors, 3 on I/O errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

import numpy as np

from .blobs import uncertainty_report
from .config import (
    COMMANDS,
    DEFAULT_DOMAIN,
    DEFAULT_GRID_N,
    DEFAULT_HBAR,
    DEFAULT_QUADRATURE_N,
    FRAME_INTERIOR_WIDTHS,
    NO_FRAME_RATIO,
)
from .errors import (
    BlobkitError,
    InvalidDimensionError,
    NoFrameError,
    NumericalDegeneracyError,
    SchemaError,
)
from .gabor import expand, frame_bounds, lattice_points, window_width
from .gaussian_states import sample, wigner_closed_form, wigner_on_grid
from .models import (
    Check,
    Command,
    CovarianceMatrix,
    GaussianState,
    Lattice,
    Report,
    RunConfig,
    SampledState,
    SampleGrid,
    Symbol,
    ToeplitzSpec,
    WHSystem,
)
from .phasespace import default_grid, wigner, wigner_moments
from .report_tracker import ReportTracker
from .selftest import SUITE, run_selftest
from .symplectic import is_symplectic_rotation, pre_iwasawa, reconstruct
from .toeplitz import (
    density_matrix,
    semiclassical_sweep,
    spectral_identity_residual,
    toeplitz_quantize,
    toeplitz_via_weyl,
    trace_three_ways,
    window_state,
)
from .utils import grid_io
from .weyl import weyl_quantize

_logger = logging.getLogger(__name__)

Window = Union[GaussianState, SampledState]
Runner = Callable[[RunConfig, SampleGrid, ReportTracker], None]

EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_SCHEMA = 2
EXIT_IO = 3

_STATE_KEYS = {"n", "X", "Y", "z0"}


def _hbars(text: str) -> List[float]:
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"invalid hbar list {text!r}") from error
    if not values or any(value <= 0 for value in values):
        raise argparse.ArgumentTypeError("hbars must be positive numbers")
    return values


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subcommand per entry of COMMANDS."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON run configuration")
    common.add_argument("--hbar", type=float, help=f"default {DEFAULT_HBAR}")
    common.add_argument(
        "--grid-n", type=int, help=f"grid points, default {DEFAULT_GRID_N}"
    )
    common.add_argument(
        "--domain",
        type=float,
        help=f"grid half-width in units of sqrt(hbar), default {DEFAULT_DOMAIN}",
    )
    common.add_argument("--seed", type=int, help="seed for random draws")
    common.add_argument("--out", help="report path; stdout when omitted")
    common.add_argument("--save", help="artifact path (BLB1, or CSV by suffix)")
    common.add_argument(
        "--assert",
        dest="assert_checks",
        action="store_true",
        help="exit 1 when a check fails",
    )
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="blobkit", description="Phase-space quantization toolkit."
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for spec in COMMANDS:
        assert isinstance(spec.command, Command)
        sub = commands.add_parser(spec.command.value, parents=[common], help=spec.help)
        for name in spec.inputs:
            sub.add_argument(f"--{name}", help=f"JSON file with the {name}")
        if spec.command in (Command.QUANTIZE, Command.FRAME, Command.DENSITY):
            sub.add_argument("--window", help="gauss, a JSON state or a BLB1 file")
        match spec.command:
            case Command.QUANTIZE:
                sub.add_argument("--mode", choices=("weyl", "toeplitz"))
            case Command.FRAME:
                sub.add_argument("--alpha", type=float)
                sub.add_argument("--beta", type=float)
                sub.add_argument("--rho", type=float)
            case Command.SWEEP:
                sub.add_argument(
                    "--hbars", type=_hbars, help="comma-separated, e.g. 1,0.5,0.25"
                )
            case Command.SELFTEST:
                sub.add_argument(
                    "--only",
                    action="append",
                    choices=[name for name, _ in SUITE],
                    help="run only this check group; repeatable",
                )
        if spec.command in (Command.QUANTIZE, Command.DENSITY):
            sub.add_argument("--quadrature-n", type=int)
            sub.add_argument("--spacing", type=float)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Merge a --config file with the explicit flags; flags win.

    Raises:
        SchemaError: If the merged configuration is invalid.
    """
    data: Dict[str, Any] = {}
    if args.config is not None:
        data = grid_io.read_json(args.config)
        if not isinstance(data, dict):
            raise SchemaError(f"{args.config}: config must be a JSON object")
        if data.get("command", args.command) != args.command:
            raise SchemaError(
                f"{args.config}: config is for {data['command']!r}, "
                f"not {args.command!r}"
            )
    data = dict(data, command=args.command)
    grid = dict(data.get("grid", {}))
    for key, flag in (("N", args.grid_n), ("domain", args.domain)):
        if flag is not None:
            grid[key] = flag
    data["grid"] = grid
    for key in ("hbar", "seed", "out"):
        if getattr(args, key) is not None:
            data[key] = getattr(args, key)
    if args.assert_checks:
        data["assert"] = True

    inputs = dict(data.get("inputs", {}))
    options = dict(data.get("options", {}))
    spec = next(spec for spec in COMMANDS if spec.command.value == args.command)
    for name in spec.inputs:
        if getattr(args, name, None) is not None:
            inputs[name] = getattr(args, name)
    for name in ("mode", "window", "alpha", "beta", "rho", "hbars", "spacing"):
        if getattr(args, name, None) is not None:
            options[name] = getattr(args, name)
    if getattr(args, "quadrature_n", None) is not None:
        options["quadrature_n"] = args.quadrature_n
    if getattr(args, "only", None):
        options["groups"] = sorted(set(args.only))
    if args.save is not None:
        options["save"] = args.save
    data["inputs"] = inputs
    data["options"] = options
    missing = [name for name in spec.inputs if name not in inputs]
    if missing:
        raise SchemaError(f"{args.command} needs --{' --'.join(missing)}")
    return RunConfig.from_dict(data)


def _read_input(config: RunConfig, name: str) -> Any:
    return grid_io.read_json(config.inputs[name])


def _gaussian_state(data: Any, hbar: float) -> GaussianState:
    if not isinstance(data, dict) or "X" not in data:
        raise SchemaError("state must be an object with at least the field 'X'")
    unknown = set(data) - _STATE_KEYS
    if unknown:
        raise SchemaError(f"unknown state fields: {sorted(unknown)}")
    try:
        state = GaussianState(
            X=data["X"], Y=data.get("Y"), z0=data.get("z0"), hbar=hbar
        )
    except (TypeError, ValueError) as error:
        if isinstance(error, BlobkitError):
            raise
        raise SchemaError(f"invalid state: {error}") from error
    if "n" in data and data["n"] != state.n:
        raise SchemaError(f"state declares n={data['n']} but X is {state.n}x{state.n}")
    return state


def _window(config: RunConfig, grid: SampleGrid) -> Window:
    """The window named by the ``window`` option: gauss, a JSON state or BLB1."""
    name = str(config.options.get("window", "gauss"))
    if name == "gauss":
        return GaussianState.standard(hbar=grid.hbar)
    if name.endswith(".json"):
        return _gaussian_state(grid_io.read_json(name), grid.hbar)
    stored = grid_io.read_grid(name)
    header = stored.header
    if (
        header["Np"] != 1
        or header["Nx"] != grid.N
        or not np.isclose(header["dx"], grid.dx, rtol=1e-12)
    ):
        raise SchemaError(f"{name}: window samples do not match the run grid")
    return SampledState(grid, stored.values).normalized()


def _quadrature(config: RunConfig) -> Dict[str, Any]:
    spacing = config.options.get("spacing")
    return {
        "quadrature_n": int(config.options.get("quadrature_n", DEFAULT_QUADRATURE_N)),
        "spacing": None if spacing is None else float(spacing),
    }


def _save(config: RunConfig, write: Callable[[str], None]) -> None:
    path = config.options.get("save")
    if path:
        write(str(path))
        _logger.info("wrote artifact %s", path)


def _run_factorize(config: RunConfig, grid: SampleGrid, tracker: ReportTracker) -> None:
    del grid
    S = grid_io.matrix_from_json(_read_input(config, "matrix"), "S")
    factors = pre_iwasawa(S)
    tracker.add_result("factors", factors.to_dict())
    tracker.log_check(
        Check.at_most(
            "reconstruction", np.max(np.abs(reconstruct(factors) - S)), 1e-9
        )
    )
    tracker.log_check(
        Check.holds("rotation_factor_unitary", is_symplectic_rotation(factors.R.S))
    )


def _run_uncertainty(
    config: RunConfig, grid: SampleGrid, tracker: ReportTracker
) -> None:
    data = _read_input(config, "sigma")
    sigma = grid_io.matrix_from_json(data, "sigma", allowed=("mean",))
    covariance = CovarianceMatrix(sigma=sigma, mean=data.get("mean"))
    report = uncertainty_report(covariance, grid.hbar)
    tracker.add_result("uncertainty", report.to_dict())
    tracker.log_check(Check.holds("rs2_holds", report.rs2_holds))
    tracker.log_check(Check.holds("rs1_holds", all(report.rs1_holds_per_j)))


def _run_wigner(config: RunConfig, grid: SampleGrid, tracker: ReportTracker) -> None:
    state = _gaussian_state(_read_input(config, "state"), grid.hbar)
    if state.n != 1:
        raise InvalidDimensionError("the grid Wigner transform needs n = 1")
    transform = wigner(sample(state, grid))
    closed = wigner_on_grid(wigner_closed_form(state), grid)
    error = float(np.max(np.abs(transform.values - closed.values)))
    tracker.add_result("max_error", error)
    tracker.add_result("integral", float(transform.integral().real))
    tracker.add_result("moments", wigner_moments(transform.real).to_dict())
    tracker.log_check(Check.at_most("wigner_closed_form", error, 1e-6))
    _save(
        config,
        lambda path: (
            grid_io.write_phase_space_csv(path, transform)
            if path.endswith(".csv")
            else grid_io.write_phase_space(path, transform, label="wigner")
        ),
    )


def _run_quantize(config: RunConfig, grid: SampleGrid, tracker: ReportTracker) -> None:
    symbol = Symbol.from_dict(_read_input(config, "symbol"))
    mode = config.options.get("mode", "weyl")
    if mode == "weyl":
        operator = weyl_quantize(symbol, grid)
    elif mode == "toeplitz":
        spec = ToeplitzSpec(
            symbol=symbol, window=_window(config, grid), **_quadrature(config)
        )
        operator = toeplitz_quantize(spec, grid)
        gap = operator.max_abs_diff(toeplitz_via_weyl(spec, grid))
        tracker.log_check(Check.at_most("weyl_route_agreement", gap, 1e-4))
    else:
        raise SchemaError(f"unknown quantization mode {mode!r}")
    matrix = operator.matrix
    scale = max(1.0, float(np.max(np.abs(matrix))))
    tracker.add_result("label", operator.label)
    tracker.add_result("trace", complex(operator.trace()))
    tracker.log_check(
        Check.at_most(
            "hermitian", np.max(np.abs(matrix - matrix.conj().T)) / scale, 1e-10
        )
    )
    _save(config, lambda path: grid_io.write_operator(path, operator))


def _run_frame(config: RunConfig, grid: SampleGrid, tracker: ReportTracker) -> None:
    root = np.sqrt(grid.hbar)
    spacing = np.sqrt(np.pi * grid.hbar)
    window = window_state(_window(config, grid), grid)
    box = 0.5 * grid.N * min(grid.dx, grid.dp)
    fitting = box - FRAME_INTERIOR_WIDTHS * window_width(window)
    lattice = Lattice(
        radius=float(config.options.get("rho", min(12.0 * root, fitting))),
        alpha=float(config.options.get("alpha", spacing)),
        beta=float(config.options.get("beta", spacing)),
    )
    system = WHSystem(window=window, lattice=lattice)
    tracker.add_result("lattice", lattice.to_dict())
    tracker.add_result("points", int(len(lattice_points(lattice))))
    tracker.add_result("density", lattice.covolume / (2.0 * np.pi * grid.hbar))
    try:
        bounds = frame_bounds(system)
    except NoFrameError as error:
        tracker.add_result("no_frame", str(error))
        tracker.log_check(Check.holds("is_frame", False))
        return
    tracker.add_result("bounds", bounds.to_dict())
    is_frame = bounds.a > NO_FRAME_RATIO * bounds.b
    tracker.log_check(Check.holds("is_frame", is_frame, ratio=bounds.ratio))
    if not is_frame:
        return
    expansion = expand(window, system)
    tracker.add_result("reconstruction_error", expansion.relative_error)
    tracker.log_check(
        Check.at_most("dual_reconstruction", expansion.relative_error, 1e-6)
    )
    _save(
        config,
        lambda path: grid_io.write_coefficients_csv(
            path, expansion.points, expansion.coefficients
        ),
    )


def _run_density(config: RunConfig, grid: SampleGrid, tracker: ReportTracker) -> None:
    mu = Symbol.from_dict(_read_input(config, "mu"))
    window = _window(config, grid)
    density = density_matrix(mu, window, grid, **_quadrature(config))
    traces = trace_three_ways(density, mu, window)
    tracker.add_result("density", density.to_dict())
    tracker.add_result("traces", traces)
    tracker.log_check(
        Check.at_most(
            "trace", max(abs(value - 1.0) for value in traces.values()), 1e-4
        )
    )
    tracker.log_check(Check.holds("positive", density.min_eigenvalue >= -1e-9))
    tracker.log_check(
        Check.at_most(
            "spectral_identity",
            spectral_identity_residual(density, mu, window),
            1e-3,
        )
    )
    _save(config, lambda path: grid_io.write_operator(path, density.operator))


def _run_sweep(config: RunConfig, grid: SampleGrid, tracker: ReportTracker) -> None:
    symbol = Symbol.from_dict(_read_input(config, "symbol"))
    hbars = [float(h) for h in config.options.get("hbars", [1.0, 0.5, 0.25, 0.125])]
    points = semiclassical_sweep(
        symbol, [[1.0]], [[0.0]], hbars, grid_n=grid.N, domain=config.domain
    )
    deviations = [point.deviation for point in points]
    tracker.add_result("sweep", [point.to_dict() for point in points])
    tracker.log_check(
        Check.holds(
            "deviation_decreasing",
            all(b < a for a, b in zip(deviations, deviations[1:])),
        )
    )
    _save(config, lambda path: grid_io.write_sweep_csv(path, points))


def _run_selftest(config: RunConfig, grid: SampleGrid, tracker: ReportTracker) -> None:
    groups = tuple(config.options.get("groups", ()))
    run_selftest(tracker, grid, seed=config.seed, groups=groups)


_RUNNERS: Dict[Command, Runner] = {
    Command.FACTORIZE: _run_factorize,
    Command.UNCERTAINTY: _run_uncertainty,
    Command.WIGNER: _run_wigner,
    Command.QUANTIZE: _run_quantize,
    Command.FRAME: _run_frame,
    Command.DENSITY: _run_density,
    Command.SWEEP: _run_sweep,
    Command.SELFTEST: _run_selftest,
}


def run(config: RunConfig, *, logger: Optional[logging.Logger] = None) -> Report:
    """Run one command and return its report.

    The report is also written to ``config.out`` when set.

    Raises:
        BlobkitError: On invalid inputs or numerical degeneracy.
        OSError: If an input cannot be read or an output cannot be written.
    """
    assert isinstance(config.command, Command)
    grid = default_grid(hbar=config.hbar, N=config.grid_n, domain=config.domain)
    _logger.debug("running %s on %s", config.command_name, grid.to_dict())
    with ReportTracker.track(
        f"blobkit.{config.command_name}",
        config,
        logger=logger if logger else logging.getLogger("blobkit.report"),
    ) as tracker:
        _RUNNERS[config.command](config, grid, tracker)
    report = tracker.report
    if config.out:
        grid_io.write_json(config.out, report.to_dict())
    return report


def exit_code(config: RunConfig, report: Report) -> int:
    """0 unless checks failed and the command is asked to enforce them."""
    spec = next(spec for spec in COMMANDS if spec.command == config.command)
    if report.passed or (spec.analysis and not config.assert_checks):
        return EXIT_OK
    return EXIT_CHECKS_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run the command and return the exit code."""
    args = build_parser().parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    handler.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    package_logger = logging.getLogger("blobkit")
    package_logger.addHandler(handler)
    if args.verbose:
        package_logger.setLevel(logging.DEBUG)
    try:
        config = config_from_args(args)
        report = run(config)
    except (SchemaError, InvalidDimensionError) as error:
        print(f"blobkit: error: {error}", file=sys.stderr)
        return EXIT_SCHEMA
    except NumericalDegeneracyError as error:
        print(f"blobkit: numerical failure: {error}", file=sys.stderr)
        return EXIT_CHECKS_FAILED
    except BlobkitError as error:
        print(f"blobkit: error: {error}", file=sys.stderr)
        return EXIT_SCHEMA
    except OSError as error:
        print(f"blobkit: I/O error: {error}", file=sys.stderr)
        return EXIT_IO
    finally:
        package_logger.removeHandler(handler)
    if config.out is None:
        sys.stdout.write(grid_io.to_json(report.to_dict()))
    code = exit_code(config, report)
    if code:
        print(f"blobkit: failing checks: {', '.join(report.failing)}", file=sys.stderr)
    return code
