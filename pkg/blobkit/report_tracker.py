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

"""Structured logging of numerical checks and run reports.

This module provides the ReportTracker class. Every check a command performs
is logged as one JSON line, and the final report of the run is logged as one
more JSON line when tracking stops.
"""

import json
import logging
import time
from typing import Any, Dict, List, Optional

from .models import Check, Report, RunConfig
from .utils import clean_values, config_digest


class ReportTracker:
    """Collects the checks and results of one run and logs them as JSON.

    The class can be used as a context manager or by manually starting and
    stopping tracking. Checks are logged as they arrive, and the assembled
    Report is logged once on stop.

    Attributes:
        _logger: Logger receiving the JSON records.
        _name: Name of the run, attached to every check.
        _config: Configuration of the run; echoed in the report.
        _log_level: Logging level of the emitted records.
        _checks: Checks logged so far.
        _results: Command-specific results recorded so far.

    Example:
        >>> config = RunConfig(command="selftest")
        >>> with ReportTracker.track("nightly", config) as tracker:
        ...     tracker.log_check(Check.at_most("trace", 1e-12, 1e-10))
        >>> tracker.report.passed
        True
    """

    _logger: logging.Logger
    _name: str
    _config: Optional[RunConfig]
    _log_level: int
    _checks: List[Check]
    _results: Dict[str, Any]

    def __init__(
        self,
        name: str,
        config: Optional[RunConfig] = None,
        *,  # Force keyword arguments
        log_level: int = logging.INFO,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        """Initialize the ReportTracker instance.

        Args:
            name: Name of the run. Also used as the logger name when no
                logger is given.
            config: Configuration of the run. Can be None for ad-hoc use,
                in which case the report carries an empty config.
            log_level: Logging level for emitted records. Defaults to
                logging.INFO.
            logger: An optional logger receiving the records.
        """
        self._name = name
        self._config = config
        self._log_level = log_level
        self._logger = logger if logger else logging.getLogger(name)
        self._logger.setLevel(log_level)
        self._checks = []
        self._results = {}
        self._started: Optional[float] = None
        self._wall_time = 0.0
        self._report: Optional[Report] = None
        self._error: Optional[str] = None

    def __enter__(self) -> "ReportTracker":
        """Enter the context manager and start tracking."""
        self.start_tracking()
        return self

    def __exit__(
        self,
        exc_type: Any,
        exc_value: Any,
        traceback: Any,
    ) -> None:
        """Exit the context manager and log the final report.

        An exception escaping the block marks the report as failed.
        """
        if exc_type is not None:
            self._error = f"{exc_type.__name__}: {exc_value}"
        self.stop_tracking()

    @staticmethod
    def track(
        name: str,
        config: Optional[RunConfig] = None,
        *,  # Force keyword arguments
        log_level: int = logging.INFO,
        logger: Optional[logging.Logger] = None,
    ) -> "ReportTracker":
        """Create a new ReportTracker for use as a context manager.

        Args:
            name: Name of the run.
            config: Configuration of the run.
            log_level: Logging level for emitted records.
            logger: An optional logger receiving the records.

        Returns:
            A new ReportTracker configured with the provided parameters.
        """
        return ReportTracker(
            name=name,
            config=config,
            log_level=log_level,
            logger=logger,
        )

    @property
    def command(self) -> Optional[str]:
        return self._config.command_name if self._config else None

    @property
    def checks(self) -> List[Check]:
        return list(self._checks)

    def start_tracking(self) -> None:
        """Reset the collected checks and start the wall clock."""
        self._checks = []
        self._results = {}
        self._report = None
        self._error = None
        self._started = time.perf_counter()

    def stop_tracking(self) -> None:
        """Stop the wall clock, build the report and log it."""
        if self._started is not None:
            self._wall_time = time.perf_counter() - self._started
            self._started = None
        self._report = self._build_report()
        self._emit(self._report.to_dict())

    def log_check(self, check: Check) -> Check:
        """Record a check and log it as one JSON line.

        Args:
            check: The check to record.

        Returns:
            The recorded check, carrying the run name and command.

        Raises:
            TypeError: If check is not a Check instance.
        """
        if not isinstance(check, Check):
            raise TypeError(f"Expected Check, got {type(check).__name__}")
        check = check.with_run_name(self._name).with_command(self.command)
        self._checks.append(check)
        self._emit(check.to_dict())
        return check

    def add_result(self, key: str, value: Any) -> None:
        """Record a command-specific result under key."""
        self._results[key] = value

    @property
    def report(self) -> Report:
        """The final report; built from the current state while tracking."""
        if self._report is not None:
            return self._report
        return self._build_report()

    def _build_report(self) -> Report:
        # pylint: disable=import-outside-toplevel
        from . import __version__

        config = self._config.to_dict() if self._config else {}
        return Report(
            config=config,
            checks=list(self._checks),
            results=dict(self._results),
            wall_time=self._wall_time,
            version=__version__,
            digest=config_digest(config),
            error=self._error,
        )

    def _emit(self, payload: Dict[str, Any]) -> None:
        self._logger.log(
            self._log_level,
            json.dumps(clean_values(payload), default=str, skipkeys=True),
        )
