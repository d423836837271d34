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

"""Generalized Gaussian states psi_XY and the canonical group of a blob.

The normative construction is psi_XY = V_Y M_(X^1/2) phi_0 applied to the
standard coherent state, so the blob attached to psi_XY is
Q(S_XY, z0) with S_XY = V_Y M_(X^1/2), and its Wigner function is
(pi hbar)^-n exp(-G(z - z0).(z - z0) / hbar) with G = S_XY^-T S_XY^-1.
"""

import logging
from typing import Any

import numpy as np
from scipy.linalg import eigvals, expm, lu_factor, lu_solve

from .config import TOL_SYM
from .errors import InvalidDimensionError, InvalidInputError
from .models import (
    CanonicalGroupSpec,
    ComplexArray,
    FloatArray,
    GaussianState,
    Generator,
    GeneratorKind,
    PhaseSpaceFunction,
    QuantumBlob,
    SampledState,
    SampleGrid,
    SymplecticMatrix,
    WignerGaussian,
)
from .phasespace import momentum_matrix
from .symplectic import (
    as_symplectic,
    generator_matrix,
    pre_iwasawa,
    scaling_matrix,
    shear_matrix,
    standard_J,
    symplectic_form_value,
)

_logger = logging.getLogger(__name__)


def _sym_sqrt(matrix: FloatArray, power: float = 0.5) -> FloatArray:
    eigenvalues, vectors = np.linalg.eigh(0.5 * (matrix + matrix.T))
    return (vectors * eigenvalues**power) @ vectors.T


def validate(state: GaussianState) -> GaussianState:
    """Check that X is symmetric positive definite and Y symmetric.

    Raises:
        InvalidInputError: If a parameter matrix violates its constraint.
    """
    X, Y = state.X, state.y_matrix
    if np.max(np.abs(X - X.T)) > TOL_SYM or np.max(np.abs(Y - Y.T)) > TOL_SYM:
        raise InvalidInputError("X and Y must be symmetric")
    if np.min(np.linalg.eigvalsh(0.5 * (X + X.T))) <= 0:
        raise InvalidInputError("X must be positive definite")
    return state


def evaluate(state: GaussianState, x: Any) -> Any:
    """Value of T(z0) psi_XY at x, times the tracked phase.

    ``x`` may be a single n-vector or an array of points with last axis n
    (a plain 1-D array is read as points when n = 1).
    """
    validate(state)
    n = state.n
    points = np.asarray(x, dtype=np.float64)
    if n == 1 and points.ndim <= 1:
        points = points[..., None]
    if points.shape[-1] != n:
        raise InvalidDimensionError(f"points must have last axis {n}")
    x0, p0 = state.center[:n], state.center[n:]
    shifted = points - x0
    Z = state.complex_matrix
    quadratic = np.einsum("...i,ij,...j->...", shifted, Z, shifted)
    normalization = np.linalg.det(state.X) ** 0.25 * (np.pi * state.hbar) ** (-n / 4)
    plane_wave = np.exp(1j * (points @ p0 - 0.5 * p0 @ x0) / state.hbar)
    values = state.phase * normalization * plane_wave * np.exp(
        -quadratic / (2.0 * state.hbar)
    )
    return values[()] if np.ndim(values) == 0 else values


def sample(state: GaussianState, grid: SampleGrid) -> SampledState:
    """Samples of a one-dimensional state on a grid.

    Raises:
        InvalidDimensionError: If the state has n > 1.
    """
    if state.n != 1:
        raise InvalidDimensionError("grid sampling is one-dimensional")
    return SampledState(grid, evaluate(state, grid.x))


def blob_matrix(X: Any, Y: Any) -> FloatArray:
    """S_XY = V_Y M_(X^1/2)."""
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    return shear_matrix(Y) @ scaling_matrix(_sym_sqrt(X))


def wigner_closed_form(state: GaussianState) -> WignerGaussian:
    """Closed-form Wigner function of a Gaussian state."""
    validate(state)
    X, Y = state.X, state.y_matrix
    root = _sym_sqrt(X)
    inverse_root = _sym_sqrt(X, -0.5)
    S = np.block([[root, np.zeros_like(X)], [inverse_root @ Y, inverse_root]])
    G = S.T @ S
    return WignerGaussian(G=0.5 * (G + G.T), z0=state.center, hbar=state.hbar)


def wigner_value(wigner: WignerGaussian, z: Any) -> Any:
    """Evaluate the Gaussian Wigner function at points with last axis 2n."""
    points = np.asarray(z, dtype=np.float64) - wigner.z0
    n = wigner.G.shape[0] // 2
    form = np.einsum("...i,ij,...j->...", points, wigner.G, points)
    return (np.pi * wigner.hbar) ** (-n) * np.exp(-form / wigner.hbar)


def wigner_on_grid(wigner: WignerGaussian, grid: SampleGrid) -> PhaseSpaceFunction:
    """The closed form sampled on the phase-space grid of a 1-D grid."""
    xx, pp = np.meshgrid(grid.x, grid.p, indexing="ij")
    values = wigner_value(wigner, np.stack([xx, pp], axis=-1))
    return PhaseSpaceFunction.on_grid(grid, values)


def covariance_matrix(state: GaussianState) -> FloatArray:
    """Covariance (hbar / 2) G^-1 of the Wigner function."""
    G = wigner_closed_form(state).G
    return 0.5 * state.hbar * np.linalg.inv(G)


def to_blob(state: GaussianState) -> QuantumBlob:
    """The quantum blob Q(S_XY, z0) attached to a Gaussian state."""
    validate(state)
    S = as_symplectic(blob_matrix(state.X, state.y_matrix))
    return QuantumBlob(S=S, z0=state.center, hbar=state.hbar)


def from_blob(blob: QuantumBlob) -> GaussianState:
    """The Gaussian state of a blob: X = L^2, Y = P from its normal form."""
    factors = pre_iwasawa(as_symplectic(blob.S))
    return GaussianState(
        X=factors.L @ factors.L, Y=factors.P, z0=blob.center, hbar=blob.hbar
    )


def _fourier_phase(Z: ComplexArray, X_new: FloatArray, X_old: FloatArray) -> complex:
    n = Z.shape[0]
    root_det = np.prod(np.sqrt(eigvals(Z)))
    phase = (
        np.exp(-0.25j * np.pi * n)
        / root_det
        * (np.linalg.det(X_old) / np.linalg.det(X_new)) ** 0.25
    )
    return complex(phase / abs(phase))


def apply_generator(state: GaussianState, generator: Generator) -> GaussianState:
    """Closed-form action of a metaplectic generator or a translation.

    V_P adds P to Y, M_L maps X + iY to L^T (X + iY) L, J inverts X + iY;
    each moves the center by the matching symplectic matrix. A translation
    T(w) moves the center and multiplies the phase by exp(i sigma(w, z0) / 2 hbar).

    Raises:
        InvalidDimensionError: If the generator acts on another dimension.
        InvalidInputError: If a scaling parameter is singular.
    """
    validate(state)
    if generator.n != state.n:
        raise InvalidDimensionError(
            f"generator acts on n={generator.n}, state has n={state.n}"
        )
    Z = state.complex_matrix
    phase = state.phase
    match generator.kind:
        case GeneratorKind.TRANSLATION:
            w = generator.required_parameter
            phase *= np.exp(
                0.5j * symplectic_form_value(w, state.center) / state.hbar
            )
            return GaussianState(
                X=state.X,
                Y=state.y_matrix,
                z0=state.center + w,
                hbar=state.hbar,
                phase=phase,
            )
        case GeneratorKind.SHEAR:
            Z_new = Z + 1j * generator.required_parameter
        case GeneratorKind.SCALING:
            L = generator.required_parameter
            if abs(np.linalg.det(L)) < 1e-14:
                raise InvalidInputError("scaling parameter L must be invertible")
            Z_new = L.T @ Z @ L
        case _:
            Z_new = np.linalg.inv(Z)
            phase *= _fourier_phase(Z, Z_new.real, state.X)
    Z_new = 0.5 * (Z_new + Z_new.T)
    center = generator_matrix(generator) @ state.center
    return GaussianState(
        X=Z_new.real, Y=Z_new.imag, z0=center, hbar=state.hbar, phase=phase
    )


def canonical_group_spec(X: Any, Y: Any) -> CanonicalGroupSpec:
    """M_XY = [[X^2 + Y^2, Y], [Y, I]] with its factorization S^-T D_X S^-1."""
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    Y = np.atleast_2d(np.asarray(Y, dtype=np.float64))
    identity = np.identity(X.shape[0])
    M = np.block([[X @ X + Y @ Y, Y], [Y, identity]])
    return CanonicalGroupSpec(
        M_XY=0.5 * (M + M.T),
        D_X=np.block([[X, np.zeros_like(X)], [np.zeros_like(X), X]]),
        S_XY=as_symplectic(blob_matrix(X, Y)),
        trace_X=float(np.trace(X)),
    )


def hamiltonian_value(spec: CanonicalGroupSpec, z: Any) -> Any:
    """H_XY(z) = M_XY z.z / 2."""
    points = np.asarray(z, dtype=np.float64)
    return 0.5 * np.einsum("...i,ij,...j->...", points, spec.M_XY, points)


def canonical_flow(X: Any, Y: Any, t: float, hbar: float = 1.0) -> SymplecticMatrix:
    """S_t = exp(t J M_XY), the Hamiltonian flow of H_XY."""
    spec = canonical_group_spec(X, Y)
    J = standard_J(spec.M_XY.shape[0] // 2).J
    S = expm(t * J @ spec.M_XY)
    scale = max(1.0, float(np.max(np.abs(S)))) ** 2
    return as_symplectic(S, tol=TOL_SYM * scale)


def hamiltonian_matrix(X: Any, Y: Any, grid: SampleGrid) -> Any:
    """Spectral discretization of ((p + Y x)^2 + X^2 x^2) / 2 for n = 1."""
    x_value = float(np.asarray(X, dtype=np.float64).reshape(-1)[0])
    y_value = float(np.asarray(Y, dtype=np.float64).reshape(-1)[0])
    position = np.diag(grid.x)
    shifted = momentum_matrix(grid) + y_value * position
    H = 0.5 * (shifted @ shifted + x_value**2 * position @ position)
    return 0.5 * (H + H.conj().T)


def eigen_residual(X: Any, Y: Any, grid: SampleGrid) -> float:
    """Relative L2 residual of H_XY psi_XY = (hbar / 2) Tr(X) psi_XY on a grid."""
    state = GaussianState(X=X, Y=Y, hbar=grid.hbar)
    psi = sample(state, grid).values
    H = hamiltonian_matrix(X, Y, grid)
    eigenvalue = 0.5 * grid.hbar * float(np.trace(np.atleast_2d(X)))
    residual = H @ psi - eigenvalue * psi
    return float(np.linalg.norm(residual) / np.linalg.norm(psi))


def phase_evolution_error(
    X: Any, Y: Any, t: float, grid: SampleGrid, steps: int = 20
) -> float:
    """L2 distance between Crank-Nicolson propagation and exp(-i t Tr(X) / 2).

    The state is propagated under i hbar d/dt psi = H_XY psi.
    """
    state = GaussianState(X=X, Y=Y, hbar=grid.hbar)
    psi = sample(state, grid).values
    H = hamiltonian_matrix(X, Y, grid)
    step = 1j * (t / steps) / (2.0 * grid.hbar) * H
    identity = np.identity(grid.N)
    lu = lu_factor(identity + step)
    evolved = psi
    for _ in range(steps):
        evolved = lu_solve(lu, (identity - step) @ evolved)
    expected = np.exp(-0.5j * t * float(np.trace(np.atleast_2d(X)))) * psi
    _logger.debug("propagated %s Crank-Nicolson steps", steps)
    return float(np.linalg.norm(evolved - expected) * np.sqrt(grid.dx))
