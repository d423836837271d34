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

"""Quantum blobs and the uncertainty principle for covariance matrices."""

import logging
from typing import Any, List, Tuple, Union

import numpy as np
from scipy.linalg import eigvalsh

from .config import TOL_PSD
from .errors import InvalidInputError
from .models import (
    CovarianceMatrix,
    FloatArray,
    QuantumBlob,
    UncertaintyReport,
)
from .symplectic import as_symplectic, pre_iwasawa, standard_J, williamson_eigenvalues

_logger = logging.getLogger(__name__)

CovarianceLike = Union[CovarianceMatrix, FloatArray, Any]


def _sigma(covariance: CovarianceLike) -> FloatArray:
    if not isinstance(covariance, CovarianceMatrix):
        covariance = CovarianceMatrix(sigma=covariance)
    sigma = covariance.sigma
    scale = max(1.0, float(np.max(np.abs(sigma))))
    if np.max(np.abs(sigma - sigma.T)) > 1e-12 * scale:
        raise InvalidInputError("covariance matrix must be symmetric")
    return 0.5 * (sigma + sigma.T)


def uncertainty_psd(
    covariance: CovarianceLike, hbar: float, tol: float = TOL_PSD
) -> bool:
    """Robertson-Schroedinger test: Sigma + (i hbar / 2) J is PSD.

    Raises:
        InvalidInputError: If the covariance matrix is not symmetric.
    """
    sigma = _sigma(covariance)
    J = standard_J(sigma.shape[0] // 2).J
    smallest = eigvalsh(sigma + 0.5j * hbar * J)[0]
    _logger.debug("smallest eigenvalue of Sigma + i hbar J / 2: %s", smallest)
    return bool(smallest >= -tol)


def uncertainty_rs(
    covariance: CovarianceLike, hbar: float, tol: float = TOL_PSD
) -> List[bool]:
    """Componentwise test D(xj,xj) D(pj,pj) >= D(xj,pj)^2 + hbar^2 / 4."""
    sigma = _sigma(covariance)
    n = sigma.shape[0] // 2
    return [
        bool(
            sigma[j, j] * sigma[n + j, n + j]
            >= sigma[j, n + j] ** 2 + 0.25 * hbar**2 - tol
        )
        for j in range(n)
    ]


def ellipsoid_capacity(covariance: CovarianceLike, hbar: float = 1.0) -> float:
    """Symplectic capacity 2 pi lambda_min of {z : Sigma^-1 z.z / 2 <= 1}.

    The ball of radius sqrt(hbar) (Sigma = hbar I / 2) has capacity pi hbar,
    so the value is at least pi hbar exactly when the uncertainty test holds.

    Raises:
        InvalidInputError: If the matrix is singular or not positive definite.
    """
    return float(2.0 * np.pi * williamson_eigenvalues(_sigma(covariance)).minimum)


def uncertainty_report(covariance: CovarianceLike, hbar: float) -> UncertaintyReport:
    """Run every uncertainty test on one covariance matrix."""
    sigma = _sigma(covariance)
    spectrum = williamson_eigenvalues(sigma)
    return UncertaintyReport(
        rs2_holds=uncertainty_psd(sigma, hbar),
        rs1_holds_per_j=uncertainty_rs(sigma, hbar),
        symplectic_spectrum=spectrum,
        capacity=ellipsoid_capacity(sigma, hbar),
        saturated=bool(abs(spectrum.minimum - 0.5 * hbar) <= 1e-9 * max(1.0, hbar)),
        hbar=hbar,
    )


def blob_normal_form(blob: QuantumBlob) -> Tuple[FloatArray, FloatArray, FloatArray]:
    """(P, L, z0) such that the blob is T(z0) V_P M_L of the ball.

    The rotation factor of the pre-Iwasawa factorization fixes the ball,
    so two blobs are equal exactly when their normal forms are.
    """
    factors = pre_iwasawa(as_symplectic(blob.S))
    return factors.P, factors.L, blob.center


def blobs_equal(first: QuantumBlob, second: QuantumBlob, tol: float = 1e-9) -> bool:
    """Whether two blobs are the same subset of phase space."""
    if first.n != second.n or not np.isclose(first.hbar, second.hbar):
        return False
    return all(
        np.allclose(a, b, atol=tol, rtol=0.0)
        for a, b in zip(blob_normal_form(first), blob_normal_form(second))
    )


def covariance_from_blob(blob: QuantumBlob) -> CovarianceMatrix:
    """Covariance (hbar / 2) S S^T of the Gaussian attached to the blob."""
    S = blob.S.S
    return CovarianceMatrix(sigma=0.5 * blob.hbar * S @ S.T, mean=blob.center)
