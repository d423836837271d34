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

"""Defaults and the command table of blobkit.

Numerical tolerances used across modules live here, together with the
mapping from command-line commands to the JSON inputs they read. All
quoted accuracies of the grid transforms refer to the default grid.
"""

import logging
import os

from .models import Command, CommandSpec

_logger = logging.getLogger(__name__)

# Symplectic membership and reconstruction
TOL_SYM = 1e-10
# Positive semidefiniteness of Sigma + (i hbar / 2) J
TOL_PSD = 1e-10
CONDITION_LIMIT = 1e12

DEFAULT_HBAR = 1.0
DEFAULT_GRID_N = 512
# Half-width of the position grid in units of sqrt(hbar)
DEFAULT_DOMAIN = 12.0
EDGE_TOLERANCE = 1e-10

# Bound on |P| and |log eig L| of random generators
GENERATOR_BOUND = 2.0
DEFAULT_WORD_LENGTH = 8

DEFAULT_QUADRATURE_N = 64
# Toeplitz quadrature spacing in units of sqrt(hbar)
QUADRATURE_SPACING = 0.25
MAX_QUADRATURE_SPACING = 0.5

# Frame-bound finite sections keep states this many window widths inside
FRAME_INTERIOR_WIDTHS = 3.0
NO_FRAME_RATIO = 1e-6

THREADS_ENV = "BLOBKIT_THREADS"


def threads_from_env() -> int:
    """Thread cap from BLOBKIT_THREADS, 1 when unset or invalid."""
    raw = os.environ.get(THREADS_ENV, "")
    if not raw:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        _logger.warning("Ignoring non-integer %s=%s", THREADS_ENV, raw)
        return 1
    if threads < 1:
        _logger.warning("Ignoring non-positive %s=%s", THREADS_ENV, raw)
        return 1
    return threads


# Command-line commands and the JSON inputs each one reads
COMMANDS = [
    CommandSpec(
        command=Command.FACTORIZE,
        help="pre-Iwasawa factorization of a symplectic matrix",
        inputs=("matrix",),
    ),
    CommandSpec(
        command=Command.UNCERTAINTY,
        help="uncertainty tests and ellipsoid capacity of a covariance matrix",
        inputs=("sigma",),
    ),
    CommandSpec(
        command=Command.WIGNER,
        help="grid Wigner transform of a Gaussian state against its closed form",
        inputs=("state",),
    ),
    CommandSpec(
        command=Command.QUANTIZE,
        help="Weyl or Toeplitz quantization of a symbol",
        inputs=("symbol",),
    ),
    CommandSpec(
        command=Command.FRAME,
        help="frame bounds of a Gaussian Weyl-Heisenberg system",
    ),
    CommandSpec(
        command=Command.DENSITY,
        help="density matrix of a phase-space probability density",
        inputs=("mu",),
    ),
    CommandSpec(
        command=Command.SWEEP,
        help="semiclassical deviation of blob smoothing over decreasing hbar",
        inputs=("symbol",),
    ),
    CommandSpec(
        command=Command.SELFTEST,
        help="run the built-in invariant suite",
        analysis=False,
    ),
]
