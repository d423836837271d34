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
from typing import Any, Dict, Optional, Union

from ..errors import SchemaError
from .command import Command

_CONFIG_KEYS = {
    "command",
    "hbar",
    "grid",
    "seed",
    "inputs",
    "options",
    "out",
    "assert",
}


@dataclass
class RunConfig:
    """Validated settings of one command-line run.

    Attributes:
        command: Command to run, either as a string or Command enum.
        hbar: Reduced Planck constant.
        grid_n: Number of grid points (power of two).
        domain: Grid half-width in units of sqrt(hbar).
        seed: Seed for every random draw of the run.
        inputs: Paths of JSON inputs keyed by name.
        options: Command-specific options (mode, alpha, hbars, ...).
        out: Path the report is written to; stdout when None.
        assert_checks: Turn failing checks into a nonzero exit code.
    """

    command: Union[str, Command]
    hbar: float = 1.0
    grid_n: int = 512
    domain: float = 12.0
    seed: int = 0
    inputs: Dict[str, str] = field(default_factory=dict)
    options: Dict[str, Any] = field(default_factory=dict)
    out: Optional[str] = None
    assert_checks: bool = False

    def __post_init__(self) -> None:
        """Normalize the command and validate the numeric settings.

        Raises:
            SchemaError: If a field is out of range or the command is unknown.
        """
        if isinstance(self.command, str):
            try:
                self.command = Command(self.command)
            except ValueError as error:
                raise SchemaError(f"unknown command {self.command!r}") from error
        if not self.hbar > 0:
            raise SchemaError(f"hbar must be positive, got {self.hbar}")
        if self.grid_n < 2 or self.grid_n & (self.grid_n - 1):
            raise SchemaError(f"grid-n must be a power of two, got {self.grid_n}")
        if not self.domain > 0:
            raise SchemaError(f"domain must be positive, got {self.domain}")

    @property
    def command_name(self) -> str:
        assert isinstance(self.command, Command)
        return self.command.value

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {
            "command": self.command_name,
            "hbar": self.hbar,
            "grid": {"N": self.grid_n, "domain": self.domain},
            "seed": self.seed,
            "inputs": dict(sorted(self.inputs.items())),
            "options": dict(sorted(self.options.items())),
            "assert": self.assert_checks,
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> "RunConfig":
        """Build a configuration from its JSON form.

        The accepted fields mirror :meth:`to_dict`; ``grid`` may hold ``N``
        and ``domain``.

        Raises:
            SchemaError: If a field is unknown or has the wrong type.
        """
        if not isinstance(data, dict):
            raise SchemaError("config must be a JSON object")
        unknown = set(data) - _CONFIG_KEYS
        if unknown:
            raise SchemaError(f"unknown config fields: {sorted(unknown)}")
        grid = data.get("grid", {})
        if not isinstance(grid, dict) or set(grid) - {"N", "domain"}:
            raise SchemaError("'grid' must be an object with fields N and domain")
        try:
            return RunConfig(
                command=data.get("command", ""),
                hbar=float(data.get("hbar", 1.0)),
                grid_n=int(grid.get("N", 512)),
                domain=float(grid.get("domain", 12.0)),
                seed=int(data.get("seed", 0)),
                inputs=dict(data.get("inputs", {})),
                options=dict(data.get("options", {})),
                out=data.get("out"),
                assert_checks=bool(data.get("assert", False)),
            )
        except SchemaError:
            raise
        except (TypeError, ValueError) as error:
            raise SchemaError(f"invalid config value: {error}") from error
