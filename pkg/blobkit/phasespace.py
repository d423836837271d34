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

"""Grid phase-space transforms for one degree of freedom.

All transforms share the :class:`~blobkit.models.SampleGrid` convention:
positions x_j = x0 + j dx on a grid centered at 0 and momenta p_m = m dp with
m = -N/2..N/2-1, so dx dp = 2 pi hbar / N. Values at the half-integer points
x +- y/2 come from zero-padded Fourier interpolation, and integrals are plain
Riemann sums.
"""

import logging
from typing import Any, Optional, Tuple

import numpy as np
from scipy import fft

from .config import EDGE_TOLERANCE, threads_from_env
from .errors import InvalidInputError, SupportWarning, warn
from .models import (
    ComplexArray,
    CovarianceMatrix,
    PhaseSpaceFunction,
    SampledState,
    SampleGrid,
)

_logger = logging.getLogger(__name__)

# Fraction of the phase-space grid treated as its border for leakage checks
_BORDER_FRACTION = 1.0 / 16.0
_BORDER_MASS = 1e-8


def default_grid(hbar: float = 1.0, N: int = 512, domain: float = 12.0) -> SampleGrid:
    """Grid of N points on [-domain sqrt(hbar), domain sqrt(hbar))."""
    return SampleGrid.centered(hbar=hbar, N=N, domain=domain)


def _require_centered(grid: SampleGrid) -> None:
    if abs(grid.start + 0.5 * grid.N * grid.dx) > 1e-12 * grid.N * grid.dx:
        raise InvalidInputError("transform needs a grid centered on 0")


def _check_same_grid(psi: SampledState, phi: SampledState) -> SampleGrid:
    if not psi.grid.matches(phi.grid):
        raise InvalidInputError("states live on different grids")
    _require_centered(psi.grid)
    return psi.grid


def _warn_edges(state: SampledState, name: str = "state") -> None:
    values = np.abs(state.values)
    edge = max(values[0], values[-1])
    if edge > EDGE_TOLERANCE * max(1.0, float(values.max())):
        warn(
            _logger,
            SupportWarning,
            f"{name} has magnitude {edge:.3e} at the grid edge",
        )


def standard_state(grid: SampleGrid) -> SampledState:
    """Samples of the coherent state phi_0 = (pi hbar)^(-1/4) exp(-x^2 / 2 hbar)."""
    hbar = grid.hbar
    return SampledState(
        grid, (np.pi * hbar) ** -0.25 * np.exp(-(grid.x**2) / (2.0 * hbar))
    )


def momentum_matrix(grid: SampleGrid) -> ComplexArray:
    """Spectral matrix of -i hbar d/dx on the periodic grid."""
    frequencies = 2.0 * np.pi * grid.hbar * fft.fftfreq(grid.N, grid.dx)
    identity = np.identity(grid.N)
    return fft.ifft(
        frequencies[:, None] * fft.fft(identity, axis=0), axis=0
    )


def inner_product(psi: SampledState, phi: SampledState) -> complex:
    """(psi | phi) = integral of psi conj(phi)."""
    if not psi.grid.matches(phi.grid):
        raise InvalidInputError("states live on different grids")
    return complex(np.sum(psi.values * np.conj(phi.values)) * psi.grid.dx)


def reflect(state: SampledState) -> SampledState:
    """The parity image psi(-x) on a centered grid."""
    _require_centered(state.grid)
    index = (-np.arange(state.grid.N)) % state.grid.N
    return state.with_values(state.values[index])


def translate(state: SampledState, z0: Any) -> SampledState:
    """T(z0) psi(x) = exp(i (p0 x - p0 x0 / 2) / hbar) psi(x - x0).

    The shift is spectral, so it is an exact cyclic shift when x0 is a
    multiple of dx and band-limited interpolation otherwise.
    """
    grid = state.grid
    x0, p0 = (float(v) for v in np.asarray(z0, dtype=np.float64).reshape(2))
    frequencies = 2.0 * np.pi * fft.fftfreq(grid.N, grid.dx)
    shifted = fft.ifft(fft.fft(state.values) * np.exp(-1j * frequencies * x0))
    phase = np.exp(1j * (p0 * grid.x - 0.5 * p0 * x0) / grid.hbar)
    return state.with_values(phase * shifted)


def half_grid(values: Any, axis: int = -1) -> ComplexArray:
    """Band-limited interpolation of N samples onto the 2N-point half grid.

    Entry 2j reproduces sample j exactly; entry 2j + 1 is the value midway
    between samples j and j + 1. Multi-dimensional input is interpolated
    along one axis.
    """
    values = np.asarray(values)
    N = values.shape[axis]
    spectrum = fft.fftshift(fft.fft(values, axis=axis), axes=axis)
    shape = list(values.shape)
    shape[axis] = 2 * N
    padded = np.zeros(shape, dtype=np.complex128)
    window: list = [slice(None)] * values.ndim
    window[axis] = slice(N // 2, N // 2 + N)
    padded[tuple(window)] = spectrum
    return fft.ifft(fft.ifftshift(padded, axes=axis), axis=axis) * 2.0


def _gather(fine: ComplexArray, index: Any) -> ComplexArray:
    inside = (index >= 0) & (index < fine.size)
    return np.where(inside, fine[np.clip(index, 0, fine.size - 1)], 0.0)


def _quadratic_transform(
    grid: SampleGrid, psi: ComplexArray, phi: ComplexArray, plus: Any, minus: Any
) -> ComplexArray:
    product = _gather(half_grid(psi), plus) * np.conj(_gather(half_grid(phi), minus))
    workers = threads_from_env()
    transformed = fft.fftshift(
        fft.fft(fft.ifftshift(product, axes=1), axis=1, workers=workers), axes=1
    )
    return transformed * grid.dx / (2.0 * np.pi * grid.hbar)


def cross_wigner(psi: SampledState, phi: SampledState) -> PhaseSpaceFunction:
    """Cross-Wigner transform on the grid.

    W(psi, phi)(x, p) = (2 pi hbar)^-1 int exp(-i p y / hbar)
    psi(x + y/2) conj(phi(x - y/2)) dy.

    Raises:
        InvalidInputError: If the states live on different grids.
    """
    grid = _check_same_grid(psi, phi)
    _warn_edges(psi, "psi")
    _warn_edges(phi, "phi")
    N = grid.N
    rows = 2 * np.arange(N)[:, None]
    offsets = np.arange(-N // 2, N // 2)[None, :]
    values = _quadratic_transform(
        grid, psi.values, phi.values, rows + offsets, rows - offsets
    )
    _logger.debug("cross-Wigner transform on %s x %s grid", N, N)
    return PhaseSpaceFunction.on_grid(grid, values)


def wigner(psi: SampledState) -> PhaseSpaceFunction:
    """The real Wigner function W(psi, psi)."""
    return cross_wigner(psi, psi).real


def cross_ambiguity(psi: SampledState, phi: SampledState) -> PhaseSpaceFunction:
    """Amb(psi, phi)(z) = 2^-1 W(psi, reflected phi)(z / 2).

    Substituting y = 2u in the cross-Wigner integral at z / 2 gives
    (2 pi hbar)^-1 int exp(-i p u / hbar) psi(u + x/2) conj(phi(u - x/2)) du,
    which is summed over the grid points u and the half grid.

    Raises:
        InvalidInputError: If the states live on different grids.
    """
    grid = _check_same_grid(psi, phi)
    _warn_edges(psi, "psi")
    _warn_edges(phi, "phi")
    N = grid.N
    shifts = np.arange(-N // 2, N // 2)[:, None]
    points = 2 * np.arange(N)[None, :]
    values = _quadratic_transform(
        grid, psi.values, phi.values, points + shifts, points - shifts
    )
    return PhaseSpaceFunction.on_grid(grid, values)


def _require_symplectic_grid(function: PhaseSpaceFunction) -> int:
    if not function.is_square:
        raise InvalidInputError(
            f"symplectic Fourier transform needs a square grid, got "
            f"{function.values.shape}"
        )
    N = function.x.size
    if not np.isclose(N * function.dx * function.dp, 2.0 * np.pi * function.hbar):
        raise InvalidInputError("grid spacing does not satisfy N dx dp = 2 pi hbar")
    for axis, step in ((function.x, function.dx), (function.p, function.dp)):
        if not np.isclose(axis[0], -0.5 * N * step):
            raise InvalidInputError("symplectic Fourier transform needs centered axes")
    return N


def symplectic_fourier(function: PhaseSpaceFunction) -> PhaseSpaceFunction:
    """F a(z) = (2 pi hbar)^-1 int exp(-i sigma(z, z') / hbar) a(z') dz'.

    With sigma(z, z') = p x' - x p', output positions pair with input momenta
    and output momenta with input positions, so the grid maps onto itself.
    The discrete transform is an exact involution.

    Raises:
        InvalidInputError: If the grid is not square and centered.
    """
    N = _require_symplectic_grid(function)
    workers = threads_from_env()
    values = np.asarray(function.values, dtype=np.complex128)
    # x' -> p with kernel exp(-i p x' / hbar)
    forward = fft.fftshift(
        fft.fft(fft.ifftshift(values, axes=0), axis=0, workers=workers), axes=0
    )
    # p' -> x with kernel exp(+i x p' / hbar)
    backward = N * fft.fftshift(
        fft.ifft(fft.ifftshift(forward, axes=1), axis=1, workers=workers), axes=1
    )
    return function.with_values(backward.T / N)


def convolve(
    function: PhaseSpaceFunction, kernel: PhaseSpaceFunction
) -> PhaseSpaceFunction:
    """(a * k)(z) = int a(z') k(z - z') dz' as a cyclic grid convolution.

    The kernel is read as centered at the origin of its grid.
    """
    if function.values.shape != kernel.values.shape:
        raise InvalidInputError("convolution needs matching grids")
    workers = threads_from_env()
    product = fft.fft2(function.values, workers=workers) * fft.fft2(
        fft.ifftshift(kernel.values), workers=workers
    )
    values = fft.ifft2(product, workers=workers) * function.dx * function.dp
    if np.isrealobj(function.values) and np.isrealobj(kernel.values):
        values = values.real
    return function.with_values(values)


def standard_wigner(grid: SampleGrid, center: Any = (0.0, 0.0)) -> PhaseSpaceFunction:
    """Closed form (pi hbar)^-1 exp(-|z - z0|^2 / hbar) on the grid."""
    x0, p0 = np.asarray(center, dtype=np.float64).reshape(2)
    xx, pp = np.meshgrid(grid.x - x0, grid.p - p0, indexing="ij")
    values = np.exp(-(xx**2 + pp**2) / grid.hbar) / (np.pi * grid.hbar)
    return PhaseSpaceFunction.on_grid(grid, values)


def husimi(
    psi: SampledState, window: Optional[SampledState] = None
) -> PhaseSpaceFunction:
    """Husimi function W psi * W phi, with phi_0 as the default window.

    Only the diagonal Husimi function is returned; it is real and
    nonnegative up to rounding.
    """
    kernel = standard_wigner(psi.grid) if window is None else wigner(window)
    return convolve(wigner(psi), kernel).real


def cross_husimi(
    psi: SampledState, phi: SampledState, window: Optional[SampledState] = None
) -> PhaseSpaceFunction:
    """W(psi, phi) * W window; complex in general."""
    kernel = standard_wigner(psi.grid) if window is None else wigner(window)
    return convolve(cross_wigner(psi, phi), kernel)


def border_mass(function: PhaseSpaceFunction) -> float:
    """L1 mass of the function on the outer band of its grid."""
    nx, np_ = function.values.shape
    bx = max(1, int(nx * _BORDER_FRACTION))
    bp = max(1, int(np_ * _BORDER_FRACTION))
    mask = np.ones((nx, np_), dtype=bool)
    mask[bx:-bx, bp:-bp] = False
    return float(np.sum(np.abs(function.values[mask])) * function.dx * function.dp)


def s0_norm(psi: SampledState, phi: SampledState) -> float:
    """L1 norm of W(psi, phi), the S0 norm of psi for the window phi."""
    transform = cross_wigner(psi, phi)
    leakage = border_mass(transform)
    if leakage > _BORDER_MASS:
        warn(
            _logger,
            SupportWarning,
            f"cross-Wigner transform has mass {leakage:.3e} near the grid edge",
        )
    return transform.l1_norm()


def marginals(function: PhaseSpaceFunction) -> Tuple[Any, Any]:
    """Position and momentum marginals: integrals over p and over x."""
    values = function.values
    return values.sum(axis=1) * function.dp, values.sum(axis=0) * function.dx


def wigner_inner_product(
    first: PhaseSpaceFunction, second: PhaseSpaceFunction
) -> complex:
    """L2 pairing int first conj(second) dz."""
    if first.values.shape != second.values.shape:
        raise InvalidInputError("functions live on different grids")
    return complex(
        np.sum(first.values * np.conj(second.values)) * first.dx * first.dp
    )


def wigner_moments(function: PhaseSpaceFunction) -> CovarianceMatrix:
    """Mean and covariance of a normalized real phase-space density."""
    weights = np.real(function.values) * function.dx * function.dp
    total = weights.sum()
    xx, pp = np.meshgrid(function.x, function.p, indexing="ij")
    mean = np.array([(weights * xx).sum(), (weights * pp).sum()]) / total
    dx_, dp_ = xx - mean[0], pp - mean[1]
    sigma = np.array(
        [
            [(weights * dx_ * dx_).sum(), (weights * dx_ * dp_).sum()],
            [(weights * dp_ * dx_).sum(), (weights * dp_ * dp_).sum()],
        ]
    ) / total
    return CovarianceMatrix(sigma=sigma, mean=mean)


def wigner_covariance(psi: SampledState, z0: Any) -> float:
    """Max deviation between W(T(z0) psi) and W psi shifted by z0.

    Raises:
        InvalidInputError: If z0 is not a point of the phase-space lattice.
    """
    grid = psi.grid
    x0, p0 = (float(v) for v in np.asarray(z0, dtype=np.float64).reshape(2))
    steps = np.array([x0 / grid.dx, p0 / grid.dp])
    rounded = np.rint(steps)
    if np.any(np.abs(steps - rounded) > 1e-9):
        raise InvalidInputError(f"shift {x0, p0} is not lattice aligned")
    moved = wigner(translate(psi, (x0, p0))).values
    shifted = np.roll(wigner(psi).values, rounded.astype(int), axis=(0, 1))
    return float(np.max(np.abs(moved - shifted)))
