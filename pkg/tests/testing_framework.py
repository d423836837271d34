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

import io
import json
import logging
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from blobkit import ReportTracker
from blobkit.models import GaussianState, RunConfig, SampledState, SampleGrid
from blobkit.gaussian_states import sample

_TEST_RUN_NAME = "test-run"


def _assert_equals(
    expected: Any, actual: Any, field_name: Optional[str] = None
) -> None:
    """Assert that two values are equal or raise an AssertionError."""
    error_msg = f"""Mismatch {field_name + '|' if field_name else ''}
    Expected: {expected}, Actual: {actual}
    """
    assert expected == actual, error_msg


def assert_close(
    expected: Any, actual: Any, tolerance: float, field_name: Optional[str] = None
) -> None:
    """Assert that the max-abs difference of two arrays is within tolerance."""
    error = float(np.max(np.abs(np.asarray(expected) - np.asarray(actual))))
    error_msg = f"""Mismatch {field_name + '|' if field_name else ''}
    Max error: {error:.3e}, Tolerance: {tolerance:.3e}
    """
    assert error <= tolerance, error_msg


def small_grid(hbar: float = 1.0, N: int = 128, domain: float = 12.0) -> SampleGrid:
    """A centered grid small enough for dense linear algebra in tests."""
    return SampleGrid.centered(hbar=hbar, N=N, domain=domain)


def gaussian(
    grid: SampleGrid,
    X: float = 1.0,
    Y: float = 0.0,
    center: Any = (0.0, 0.0),
) -> SampledState:
    """Samples of a one-dimensional Gaussian state on the grid."""
    state = GaussianState(X=[[X]], Y=[[Y]], z0=list(center), hbar=grid.hbar)
    return sample(state, grid)


def capture_logger(name: str = "test-logger") -> tuple[logging.Logger, io.StringIO]:
    """A logger writing bare messages into a fresh StringIO stream."""
    log_stream = io.StringIO()
    logger = logging.getLogger(name)
    logger.handlers.clear()
    logger.addHandler(logging.StreamHandler(log_stream))
    logger.setLevel(logging.INFO)
    logger.propagate = False
    return logger, log_stream


def run_tracked_checks(
    test_code: Callable[[ReportTracker], None],
    config: Optional[RunConfig] = None,
    **tracker_kwargs: Any,
) -> List[Dict[str, Any]]:
    """Run test_code inside a ReportTracker and return its parsed JSON lines.

    Args:
        test_code: Callable receiving the tracker.
        config: Configuration attached to the tracker.
        **tracker_kwargs: Additional keyword arguments for ReportTracker.track.

    Returns:
        One dictionary per emitted line; the last one is the report.
    """
    logger = tracker_kwargs.pop("logger", None)
    if logger is None:
        logger, log_stream = capture_logger()
    else:
        log_stream = io.StringIO()
        logger.handlers.clear()
        logger.addHandler(logging.StreamHandler(log_stream))
    name = tracker_kwargs.pop("name", _TEST_RUN_NAME)

    with ReportTracker.track(name, config, logger=logger, **tracker_kwargs) as tracker:
        test_code(tracker)

    return [json.loads(line) for line in log_stream.getvalue().splitlines()]
