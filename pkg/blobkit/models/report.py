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

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .check import Check


@dataclass
class Report:
    """The machine-readable outcome of one run.

    Attributes:
        config: Echo of the run configuration.
        checks: Checks in the order they were logged.
        results: Command-specific results.
        wall_time: Elapsed seconds; the only non-deterministic field.
        version: Package version that produced the report.
        digest: CRC32 digest of the configuration.
        error: The exception that aborted the run, if any.
    """

    config: Dict[str, Any]
    checks: List[Check] = field(default_factory=list)
    results: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0
    version: str = "unknown"
    digest: str = ""
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(check.passed for check in self.checks)

    @property
    def failing(self) -> List[str]:
        return [check.name for check in self.checks if not check.passed]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "config": self.config,
            "digest": self.digest,
            "version": self.version,
            "results": self.results,
            "checks": [
                {
                    "name": check.name,
                    "value": check.value,
                    "tolerance": check.tolerance,
                    "pass": check.passed,
                }
                for check in self.checks
            ],
            "pass": self.passed,
            "error": self.error,
            "wall_time": self.wall_time,
        }
