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

"""Symplectic linear algebra in the convention J = [[0, I], [-I, 0]].

The symplectic form is sigma(z, z') = (J z) . z' = p . x' - x . p' and the
generators are

    V_P = [[I, 0], [-P, I]],  M_L = [[L^-1, 0], [0, L^T]],  J,

so that every S in Sp(n) factors uniquely as S = V_P M_L R with R a
symplectic rotation [[U, V], [-V, U]].
"""

import logging
from typing import Any, Dict, Union

import numpy as np
from scipy.linalg import block_diag, eigh, eigvalsh

from .config import (
    CONDITION_LIMIT,
    DEFAULT_WORD_LENGTH,
    GENERATOR_BOUND,
    TOL_SYM,
)
from .errors import (
    InvalidDimensionError,
    InvalidInputError,
    NumericalDegeneracyError,
)
from .models import (
    FloatArray,
    Generator,
    GeneratorKind,
    PreIwasawaFactors,
    StandardForm,
    SymplecticMatrix,
    SymplecticSpectrum,
)

_logger = logging.getLogger(__name__)

MatrixLike = Union[SymplecticMatrix, FloatArray, Any]


def _as_array(S: MatrixLike) -> FloatArray:
    matrix = S.S if isinstance(S, SymplecticMatrix) else np.asarray(S, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidDimensionError(f"expected a square matrix, got {matrix.shape}")
    if matrix.shape[0] == 0 or matrix.shape[0] % 2:
        raise InvalidDimensionError(
            f"expected an even dimension, got {matrix.shape[0]}"
        )
    return matrix


def standard_J(n: int) -> StandardForm:
    """Return the standard symplectic form for n degrees of freedom.

    Raises:
        InvalidDimensionError: If n < 1.
    """
    if n < 1:
        raise InvalidDimensionError(f"n must be >= 1, got {n}")
    identity = np.identity(n)
    zeros = np.zeros((n, n))
    return StandardForm(n=n, J=np.block([[zeros, identity], [-identity, zeros]]))


def _J(n: int) -> FloatArray:
    return standard_J(n).J


def symplectic_form_value(z: Any, z_prime: Any) -> float:
    """sigma(z, z') = (J z) . z'."""
    z = np.asarray(z, dtype=float).reshape(-1)
    z_prime = np.asarray(z_prime, dtype=float).reshape(-1)
    if z.size != z_prime.size or z.size % 2:
        raise InvalidDimensionError("phase-space vectors must share an even size")
    return float((_J(z.size // 2) @ z) @ z_prime)


def is_symplectic(S: MatrixLike, tol: float = TOL_SYM) -> bool:
    """Whether max |S J S^T - J| <= tol.

    Raises:
        InvalidDimensionError: If S is not square with even dimension.
    """
    matrix = _as_array(S)
    J = _J(matrix.shape[0] // 2)
    return bool(np.max(np.abs(matrix @ J @ matrix.T - J)) <= tol)


def block_conditions(S: MatrixLike) -> Dict[str, float]:
    """Residuals of the block characterizations of Sp(n).

    With S = [[A, B], [C, D]], the first set asks A^T C and B^T D to be
    symmetric with A^T D - C^T B = I; the second asks the same of A B^T,
    C D^T and A D^T - B C^T.
    """
    matrix = _as_array(S)
    n = matrix.shape[0] // 2
    A, B = matrix[:n, :n], matrix[:n, n:]
    C, D = matrix[n:, :n], matrix[n:, n:]
    identity = np.identity(n)

    def _asym(M: FloatArray) -> float:
        return float(np.max(np.abs(M - M.T)))

    first = max(
        _asym(A.T @ C),
        _asym(B.T @ D),
        float(np.max(np.abs(A.T @ D - C.T @ B - identity))),
    )
    second = max(
        _asym(A @ B.T),
        _asym(C @ D.T),
        float(np.max(np.abs(A @ D.T - B @ C.T - identity))),
    )
    return {"transpose_blocks": first, "row_blocks": second}


def as_symplectic(S: MatrixLike, tol: float = TOL_SYM) -> SymplecticMatrix:
    """Validate and wrap a matrix as a SymplecticMatrix.

    Raises:
        InvalidDimensionError: If S is not square with even dimension.
        InvalidInputError: If S is not symplectic to tol.
    """
    matrix = _as_array(S)
    if not is_symplectic(matrix, tol):
        J = _J(matrix.shape[0] // 2)
        residual = np.max(np.abs(matrix @ J @ matrix.T - J))
        raise InvalidInputError(f"matrix is not symplectic (residual {residual:.3e})")
    determinant = float(np.linalg.det(matrix))
    if abs(determinant - 1.0) > 1e-6:
        _logger.warning("Symplectic matrix has determinant %s", determinant)
    return S if isinstance(S, SymplecticMatrix) else SymplecticMatrix(matrix)


def symplectic_inverse(S: MatrixLike) -> FloatArray:
    """S^-1 = -J S^T J."""
    matrix = _as_array(S)
    J = _J(matrix.shape[0] // 2)
    return -J @ matrix.T @ J


def shear_matrix(P: Any) -> FloatArray:
    """V_P = [[I, 0], [-P, I]] for symmetric P."""
    P = np.atleast_2d(np.asarray(P, dtype=float))
    if np.max(np.abs(P - P.T), initial=0.0) > TOL_SYM:
        raise InvalidInputError("shear parameter P must be symmetric")
    n = P.shape[0]
    return np.block([[np.identity(n), np.zeros((n, n))], [-P, np.identity(n)]])


def scaling_matrix(L: Any) -> FloatArray:
    """M_L = [[L^-1, 0], [0, L^T]] for invertible L.

    Raises:
        InvalidInputError: If L is singular.
    """
    L = np.atleast_2d(np.asarray(L, dtype=float))
    if np.linalg.cond(L) > CONDITION_LIMIT:
        raise InvalidInputError("scaling parameter L must be invertible")
    return block_diag(np.linalg.inv(L), L.T)


def rotation_matrix(U: Any, V: Any) -> FloatArray:
    """R = [[U, V], [-V, U]]."""
    U = np.atleast_2d(np.asarray(U, dtype=float))
    V = np.atleast_2d(np.asarray(V, dtype=float))
    return np.block([[U, V], [-V, U]])


def is_symplectic_rotation(S: MatrixLike, tol: float = TOL_SYM) -> bool:
    """Whether S lies in Sp(n) and O(2n) with the block form [[U, V], [-V, U]].

    Equivalently U^T V is symmetric and U^T U + V^T V = I.
    """
    matrix = _as_array(S)
    n = matrix.shape[0] // 2
    U, V = matrix[:n, :n], matrix[:n, n:]
    block_form = np.allclose(matrix[n:, :n], -V, atol=tol, rtol=0.0) and np.allclose(
        matrix[n:, n:], U, atol=tol, rtol=0.0
    )
    cross = U.T @ V
    unitary = (
        np.max(np.abs(cross - cross.T)) <= tol
        and np.max(np.abs(U.T @ U + V.T @ V - np.identity(n))) <= tol
    )
    return bool(block_form and unitary)


def generator_matrix(generator: Generator) -> FloatArray:
    """The 2n x 2n matrix of a linear generator.

    Raises:
        InvalidInputError: For translations, which are not linear.
    """
    match generator.kind:
        case GeneratorKind.SHEAR:
            return shear_matrix(generator.required_parameter)
        case GeneratorKind.SCALING:
            return scaling_matrix(generator.required_parameter)
        case GeneratorKind.ROTATION:
            return _J(generator.n)
        case _:
            raise InvalidInputError("translations have no symplectic matrix")


def pre_iwasawa(S: MatrixLike, tol: float = TOL_SYM) -> PreIwasawaFactors:
    """Factor S = V_P M_L R.

    L = (AA^T + BB^T)^(-1/2), P = -(CA^T + DB^T)(AA^T + BB^T)^-1,
    U = L A and V = L B. The square root uses a symmetric eigendecomposition.

    Raises:
        InvalidInputError: If S is not symplectic to tol.
        NumericalDegeneracyError: If AA^T + BB^T has condition number > 1e12.
    """
    matrix = as_symplectic(S, tol)
    A, B, C, D = matrix.A, matrix.B, matrix.C, matrix.D
    W = A @ A.T + B @ B.T
    W = 0.5 * (W + W.T)
    eigenvalues, vectors = eigh(W)
    condition = eigenvalues[-1] / eigenvalues[0]
    if eigenvalues[0] <= 0 or condition > CONDITION_LIMIT:
        raise NumericalDegeneracyError(
            f"AA^T + BB^T is ill-conditioned (condition number {condition:.3e})"
        )
    L = (vectors * eigenvalues**-0.5) @ vectors.T
    W_inv = (vectors / eigenvalues) @ vectors.T
    P = -(C @ A.T + D @ B.T) @ W_inv
    P = 0.5 * (P + P.T)
    L = 0.5 * (L + L.T)
    R = SymplecticMatrix(rotation_matrix(L @ A, L @ B))
    _logger.debug("pre-Iwasawa factors computed, condition number %s", condition)
    return PreIwasawaFactors(P=P, L=L, R=R)


def reconstruct(factors: PreIwasawaFactors) -> FloatArray:
    """V_P M_L R."""
    return shear_matrix(factors.P) @ scaling_matrix(factors.L) @ factors.R.S


def williamson_eigenvalues(sigma: Any) -> SymplecticSpectrum:
    """Symplectic eigenvalues of a symmetric positive-definite matrix.

    They are the moduli of the eigenvalues of J Sigma, computed from the
    Hermitian matrix i K with K = C^T J C and Sigma = C C^T.

    Raises:
        InvalidInputError: If sigma is not symmetric positive definite.
    """
    matrix = _as_array(sigma)
    scale = max(1.0, float(np.max(np.abs(matrix))))
    if np.max(np.abs(matrix - matrix.T)) > 1e-12 * scale:
        raise InvalidInputError("covariance matrix must be symmetric")
    matrix = 0.5 * (matrix + matrix.T)
    try:
        factor = np.linalg.cholesky(matrix)
    except np.linalg.LinAlgError as error:
        raise InvalidInputError("matrix must be positive definite") from error
    n = matrix.shape[0] // 2
    K = factor.T @ _J(n) @ factor
    values = eigvalsh(1j * K)
    return SymplecticSpectrum(np.sort(values)[n:])


def random_symplectic_rotation(n: int, seed: int) -> SymplecticMatrix:
    """A random symplectic rotation from a random n x n unitary U + iV."""
    rng = np.random.default_rng(seed % (1 << 64))
    Z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    Q, R = np.linalg.qr(Z)
    Q = Q * (np.diag(R) / np.abs(np.diag(R)))
    return SymplecticMatrix(rotation_matrix(Q.real, Q.imag))


def random_symplectic(
    n: int, seed: int, word_length: int = DEFAULT_WORD_LENGTH
) -> SymplecticMatrix:
    """A deterministic random product of word_length generators V_P, M_L, J.

    Shear entries and log-eigenvalues of scalings are drawn well inside
    GENERATOR_BOUND to keep products of long words well conditioned.

    Raises:
        InvalidDimensionError: If n < 1.
    """
    if n < 1:
        raise InvalidDimensionError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(seed % (1 << 64))
    spread = GENERATOR_BOUND / 4.0
    S = np.identity(2 * n)
    for _ in range(word_length):
        choice = rng.integers(3)
        if choice == 0:
            A = rng.uniform(-spread, spread, size=(n, n))
            factor = shear_matrix(0.5 * (A + A.T))
        elif choice == 1:
            Q, _ = np.linalg.qr(rng.normal(size=(n, n)))
            logs = rng.uniform(-spread, spread, size=n)
            factor = scaling_matrix((Q * np.exp(logs)) @ Q.T)
        else:
            factor = _J(n)
        S = factor @ S
    return SymplecticMatrix(S)
