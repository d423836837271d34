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
from typing import Any, Dict, Optional


@dataclass
class Check:
    """A named numerical check and its outcome.

    Attributes:
        name: Identifier of the check.
        value: Measured quantity (an error, a ratio, a flag).
        tolerance: Threshold the value was compared against, if any.
        passed: Whether the check holds.
        run_name: Name of the run that produced the check. Can be None if
            not set.
        command: Command that produced the check. Can be None if not set.
        detail: Additional metadata as key-value pairs.
    """

    name: str
    value: Any
    tolerance: Optional[float] = None
    passed: bool = True
    run_name: Optional[str] = None
    command: Optional[str] = None
    detail: Optional[Dict[str, Any]] = None

    @staticmethod
    def at_most(name: str, value: float, tolerance: float, **detail: Any) -> "Check":
        """A check that passes when value <= tolerance."""
        return Check(
            name=name,
            value=float(value),
            tolerance=tolerance,
            passed=bool(value <= tolerance),
            detail=detail or None,
        )

    @staticmethod
    def holds(name: str, condition: bool, **detail: Any) -> "Check":
        """A check on a boolean condition."""
        return Check(
            name=name,
            value=bool(condition),
            passed=bool(condition),
            detail=detail or None,
        )

    def with_run_name(self, run_name: str) -> "Check":
        """Create a new Check identical to this one with the given run name."""
        new = Check(**self.__dict__)
        new.run_name = run_name
        return new

    def with_command(self, command: Optional[str]) -> "Check":
        """Create a new Check identical to this one with the given command."""
        new = Check(**self.__dict__)
        new.command = command
        return new

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "run_name": self.run_name,
            "command": self.command,
            "name": self.name,
            "value": self.value,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "detail": self.detail if self.detail else None,
        }
