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

"""A phase-space quantization toolkit.

This package provides symplectic linear algebra, quantum-blob uncertainty
tests, generalized Gaussian states, grid Wigner and ambiguity transforms,
Weyl and Toeplitz quantization, Gabor frames and density matrices built
from phase-space probability densities. Every result can be checked
against an analytic oracle, and the checks are logged as JSON by
ReportTracker.

Example:
    Quantize a symbol and track a check:

    >>> import numpy as np
    >>> from blobkit import ReportTracker, Symbol, default_grid, weyl_quantize
    >>> from blobkit.models import Check
    >>> grid = default_grid(hbar=1.0, N=256)
    >>> operator = weyl_quantize(Symbol.constant(1.0), grid)
    >>> with ReportTracker.track("identity") as tracker:
    ...     tracker.log_check(
    ...         Check.at_most("identity", operator.max_abs_diff(np.eye(256)), 1e-8)
    ...     )
"""

try:
    from ._version import __version__
except ImportError:
    # Fallback for development installations
    from importlib.metadata import PackageNotFoundError, version

    try:
        __version__ = version("blobkit")
    except PackageNotFoundError:
        __version__ = "0+unknown"

from .models import (
    CovarianceMatrix,
    DiscretizedOperator,
    GaussianState,
    Lattice,
    QuantumBlob,
    SampledState,
    SampleGrid,
    Symbol,
    SymplecticMatrix,
    ToeplitzSpec,
    WHSystem,
)
from .phasespace import default_grid, wigner
from .report_tracker import ReportTracker
from .toeplitz import density_matrix, toeplitz_quantize
from .weyl import weyl_quantize

__all__ = [
    "CovarianceMatrix",
    "DiscretizedOperator",
    "GaussianState",
    "Lattice",
    "QuantumBlob",
    "ReportTracker",
    "SampleGrid",
    "SampledState",
    "Symbol",
    "SymplecticMatrix",
    "ToeplitzSpec",
    "WHSystem",
    "__version__",
    "default_grid",
    "density_matrix",
    "toeplitz_quantize",
    "weyl_quantize",
    "wigner",
]
