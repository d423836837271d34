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

from .arrays import ComplexArray, FloatArray
from .canonical_group_spec import CanonicalGroupSpec
from .check import Check
from .command import Command
from .command_spec import CommandSpec
from .covariance_matrix import CovarianceMatrix
from .density_matrix import DensityMatrix
from .discretized_operator import DiscretizedOperator
from .frame_bounds import FrameBounds
from .gabor_expansion import GaborExpansion
from .gaussian_state import GaussianState
from .generator import Generator
from .generator_kind import GeneratorKind
from .lattice import Lattice
from .phase_space_function import PhaseSpaceFunction
from .pre_iwasawa_factors import PreIwasawaFactors
from .quantum_blob import QuantumBlob
from .report import Report
from .run_config import RunConfig
from .sample_grid import SampleGrid
from .sampled_state import SampledState
from .standard_form import StandardForm
from .sweep_point import SweepPoint
from .symbol import Symbol
from .symbol_kind import SymbolKind
from .symplectic_matrix import SymplecticMatrix
from .symplectic_spectrum import SymplecticSpectrum
from .toeplitz_spec import ToeplitzSpec
from .uncertainty_report import UncertaintyReport
from .wh_system import WHSystem
from .wigner_gaussian import WignerGaussian

__all__ = [
    "CanonicalGroupSpec",
    "Check",
    "Command",
    "CommandSpec",
    "ComplexArray",
    "CovarianceMatrix",
    "DensityMatrix",
    "DiscretizedOperator",
    "FloatArray",
    "FrameBounds",
    "GaborExpansion",
    "GaussianState",
    "Generator",
    "GeneratorKind",
    "Lattice",
    "PhaseSpaceFunction",
    "PreIwasawaFactors",
    "QuantumBlob",
    "Report",
    "RunConfig",
    "SampleGrid",
    "SampledState",
    "StandardForm",
    "SweepPoint",
    "Symbol",
    "SymbolKind",
    "SymplecticMatrix",
    "SymplecticSpectrum",
    "ToeplitzSpec",
    "UncertaintyReport",
    "WHSystem",
    "WignerGaussian",
]
