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

"""Weyl-Heisenberg (Gabor) systems on the grid (n = 1).

Atoms are the translates phi_lambda = T(lambda) phi of a unit-norm window
over the points of a truncated lattice. Frame bounds are finite-section
estimates: the frame operator is compressed onto the span of the Hermite
functions whose classical radius lies a fixed number of window widths
inside the truncation disk, so the boundary of the disk does not enter.
"""

import logging
from typing import Any, List, Sequence, Tuple

import numpy as np
from scipy import fft
from scipy.linalg import eigh, eigvalsh

from .config import FRAME_INTERIOR_WIDTHS, NO_FRAME_RATIO
from .errors import (
    InvalidDimensionError,
    InvalidInputError,
    NoFrameError,
    TruncationWarning,
    warn,
)
from .models import (
    ComplexArray,
    DiscretizedOperator,
    FloatArray,
    FrameBounds,
    GaborExpansion,
    Generator,
    GeneratorKind,
    Lattice,
    SampledState,
    SampleGrid,
    WHSystem,
)
from .symplectic import generator_matrix
from .weyl import metaplectic_matrix

_logger = logging.getLogger(__name__)

_RESCALE = 1e100


def lattice_points(lattice: Lattice) -> FloatArray:
    """Points of the lattice inside the truncation disk.

    Returns:
        Array of shape (K, 2), sorted by |z| and then lexicographically.
    """
    M = lattice.generator
    bound = int(np.ceil(lattice.radius * np.linalg.norm(np.linalg.inv(M), 2))) + 1
    k, m = np.meshgrid(
        np.arange(-bound, bound + 1), np.arange(-bound, bound + 1), indexing="ij"
    )
    points = np.stack([k.ravel(), m.ravel()], axis=1) @ M.T
    radii = np.hypot(points[:, 0], points[:, 1])
    inside = radii <= lattice.radius * (1.0 + 1e-12)
    points, radii = points[inside], radii[inside]
    order = np.lexsort((points[:, 1], points[:, 0], np.round(radii, 12)))
    return points[order]


def window_width(window: SampledState) -> float:
    """sqrt(2) times the larger of the position and momentum spreads.

    Equals sqrt(hbar) for the standard coherent state.
    """
    grid = window.grid
    density = np.abs(window.values) ** 2
    density = density / density.sum()
    mean_x = float(np.sum(density * grid.x))
    spread_x = float(np.sum(density * (grid.x - mean_x) ** 2))
    spectrum = np.abs(fft.fftshift(fft.fft(window.values))) ** 2
    spectrum = spectrum / spectrum.sum()
    mean_p = float(np.sum(spectrum * grid.p))
    spread_p = float(np.sum(spectrum * (grid.p - mean_p) ** 2))
    return float(np.sqrt(2.0 * max(spread_x, spread_p)))


def _check_truncation(system: WHSystem) -> None:
    grid = system.window.grid
    reach = system.lattice.radius + FRAME_INTERIOR_WIDTHS * window_width(system.window)
    box = min(0.5 * grid.N * grid.dx, 0.5 * grid.N * grid.dp)
    if reach <= box:
        return
    gap = max(box - system.lattice.radius, 0.0)
    density = np.abs(system.window.values) ** 2 * grid.dx
    tail = float(np.sum(density[np.abs(grid.x) > gap]))
    warn(
        _logger,
        TruncationWarning,
        f"atoms reach {reach:.3g} beyond the grid box {box:.3g}; "
        f"estimated tail mass {tail:.3e}",
    )


def translates(window: SampledState, points: Any) -> ComplexArray:
    """Rows T(z) phi for each phase-space point z in ``points`` (shape (K, 2))."""
    grid = window.grid
    points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if points.size == 0:
        return np.zeros((0, grid.N), dtype=np.complex128)
    x0, p0 = points[:, 0], points[:, 1]
    k = 2.0 * np.pi * fft.fftfreq(grid.N, grid.dx)
    spectrum = fft.fft(window.values)
    shifted = fft.ifft(spectrum[None, :] * np.exp(-1j * np.outer(x0, k)), axis=1)
    phase = np.exp(
        1j * (np.outer(p0, grid.x) - 0.5 * (p0 * x0)[:, None]) / grid.hbar
    )
    return phase * shifted


def gabor_atoms(system: WHSystem) -> ComplexArray:
    """Atoms T(lambda) phi as rows, in lattice enumeration order."""
    _check_truncation(system)
    return translates(system.window, lattice_points(system.lattice))


def multiplier(weights: Any, system: WHSystem) -> DiscretizedOperator:
    """Gabor multiplier sum_lambda a_lambda (. | phi_lambda) phi_lambda.

    Raises:
        InvalidDimensionError: If there is not one weight per lattice point.
        InvalidInputError: If a weight is not finite.
    """
    atoms = gabor_atoms(system)
    values = np.asarray(weights, dtype=np.complex128).reshape(-1)
    if values.size != atoms.shape[0]:
        raise InvalidDimensionError(
            f"expected {atoms.shape[0]} weights, got {values.size}"
        )
    if not np.all(np.isfinite(values)):
        raise InvalidInputError("multiplier weights must be finite")
    grid = system.window.grid
    matrix = (atoms.T * values) @ atoms.conj() * grid.dx
    return DiscretizedOperator(grid, matrix, label="gabor-multiplier")


def frame_operator(system: WHSystem) -> DiscretizedOperator:
    """S psi = sum_lambda (psi | phi_lambda) phi_lambda over the enumerated points."""
    count = lattice_points(system.lattice).shape[0]
    operator = multiplier(np.ones(count), system)
    operator.label = "frame"
    return operator


def interior_basis(grid: SampleGrid, radius: float) -> ComplexArray:
    """Orthonormal grid basis of Hermite functions of classical radius <= radius.

    Columns are normalized for the inner product sum u conj(v) dx.

    Raises:
        InvalidInputError: If no Hermite function fits inside the radius.
    """
    hbar = grid.hbar
    highest = int(np.floor((radius**2 / hbar - 1.0) / 2.0))
    if highest < 0:
        raise InvalidInputError(
            f"interior radius {radius:.3g} holds no state at hbar={hbar}"
        )
    xi = grid.x / np.sqrt(hbar)
    log_scale = -0.5 * xi**2 - 0.25 * np.log(np.pi * hbar)
    previous = np.zeros_like(xi)
    current = np.ones_like(xi)
    basis = np.empty((grid.N, highest + 1))
    basis[:, 0] = np.exp(log_scale)
    for n in range(highest):
        following = (
            np.sqrt(2.0 / (n + 1)) * xi * current - np.sqrt(n / (n + 1)) * previous
        )
        previous, current = current, following
        large = np.abs(current) > _RESCALE
        current[large] /= _RESCALE
        previous[large] /= _RESCALE
        log_scale[large] += np.log(_RESCALE)
        basis[:, n + 1] = current * np.exp(log_scale)
    q, _ = np.linalg.qr(basis * np.sqrt(grid.dx))
    return q / np.sqrt(grid.dx)


def frame_bounds(system: WHSystem) -> FrameBounds:
    """Finite-section frame bounds of the system.

    Raises:
        NoFrameError: If the lattice has no points in the truncation disk.
        InvalidInputError: If the interior region holds no state.
    """
    grid = system.window.grid
    operator = frame_operator(system)
    if not np.any(operator.matrix):
        raise NoFrameError("the truncated lattice is empty")
    margin = FRAME_INTERIOR_WIDTHS * window_width(system.window)
    basis = interior_basis(grid, system.lattice.radius - margin)
    section = basis.conj().T @ operator.matrix @ basis * grid.dx
    eigenvalues = eigvalsh(0.5 * (section + section.conj().T))
    bounds = FrameBounds(a=eigenvalues[0], b=eigenvalues[-1])
    _logger.info(
        "frame bounds a=%.6g b=%.6g on %s interior states",
        bounds.a,
        bounds.b,
        basis.shape[1],
    )
    return bounds


def _pseudo_inverse(matrix: ComplexArray) -> ComplexArray:
    eigenvalues, vectors = eigh(0.5 * (matrix + matrix.conj().T))
    keep = eigenvalues > NO_FRAME_RATIO * eigenvalues[-1]
    kept = vectors[:, keep]
    return (kept / eigenvalues[keep]) @ kept.conj().T


def dual_window(system: WHSystem) -> SampledState:
    """Canonical dual window S^-1 phi."""
    inverse = _pseudo_inverse(frame_operator(system).matrix)
    return system.window.with_values(inverse @ system.window.values)


def ambiguity_coefficients(psi: SampledState, system: WHSystem) -> ComplexArray:
    """2 pi hbar Amb(psi, phi)(lambda) at each lattice point.

    Evaluated as int exp(-i p y / hbar) psi(y + x/2) conj(phi(y - x/2)) dy
    with spectral half shifts, independently of the atoms.
    """
    grid = psi.grid
    points = lattice_points(system.lattice)
    x0, p0 = points[:, 0], points[:, 1]
    k = 2.0 * np.pi * fft.fftfreq(grid.N, grid.dx)
    half = 0.5j * np.outer(x0, k)
    ahead = fft.ifft(fft.fft(psi.values)[None, :] * np.exp(half), axis=1)
    behind = fft.ifft(fft.fft(system.window.values)[None, :] * np.exp(-half), axis=1)
    phase = np.exp(-1j * np.outer(p0, grid.x) / grid.hbar)
    return np.sum(phase * ahead * behind.conj(), axis=1) * grid.dx


def expand(psi: SampledState, system: WHSystem) -> GaborExpansion:
    """Gabor coefficients of psi and its canonical-dual reconstruction.

    Raises:
        NoFrameError: If the finite-section lower bound is not above
            1e-6 times the upper bound.
    """
    if not psi.grid.matches(system.window.grid):
        raise InvalidInputError("state and window live on different grids")
    bounds = frame_bounds(system)
    if bounds.a <= NO_FRAME_RATIO * bounds.b:
        raise NoFrameError(
            f"lower frame bound {bounds.a:.3e} is negligible against {bounds.b:.3e}"
        )
    grid = psi.grid
    atoms = gabor_atoms(system)
    coefficients = atoms.conj() @ psi.values * grid.dx
    synthesis = atoms.T @ coefficients
    inverse = _pseudo_inverse(atoms.T @ atoms.conj() * grid.dx)
    reconstruction = psi.with_values(inverse @ synthesis)
    error = float(
        np.linalg.norm(reconstruction.values - psi.values) / np.linalg.norm(psi.values)
    )
    ambiguity = ambiguity_coefficients(psi, system)
    agreement = float(np.max(np.abs(ambiguity - coefficients), initial=0.0))
    _logger.info(
        "expanded over %s atoms: relative error %.3e, ambiguity agreement %.3e",
        atoms.shape[0],
        error,
        agreement,
    )
    return GaborExpansion(
        points=lattice_points(system.lattice),
        coefficients=coefficients,
        ambiguity_coefficients=ambiguity,
        reconstruction=reconstruction,
        relative_error=error,
        ambiguity_agreement=agreement,
    )


def gabor_density(probabilities: Any, system: WHSystem) -> DiscretizedOperator:
    """Mixed state sum_mu lambda_mu |phi_mu)(phi_mu| over the lattice points.

    Raises:
        InvalidInputError: If the weights are negative or do not sum to 1.
    """
    weights = np.asarray(probabilities, dtype=np.float64).reshape(-1)
    if np.any(weights < 0) or abs(weights.sum() - 1.0) > 1e-10:
        raise InvalidInputError("probabilities must be nonnegative and sum to 1")
    operator = multiplier(weights, system)
    operator.label = "gabor-density"
    return operator


def deform(system: WHSystem, generator: Generator) -> WHSystem:
    """The transported system (S phi, S Lambda) for a linear generator S.

    Raises:
        InvalidInputError: If the generator is a translation.
    """
    if generator.kind == GeneratorKind.TRANSLATION:
        raise InvalidInputError("only linear generators deform a lattice")
    grid = system.window.grid
    window = metaplectic_matrix(generator, grid).apply(system.window).normalized()
    lattice = system.lattice.transformed(generator_matrix(generator))
    return WHSystem(window=window, lattice=lattice)


def density_sweep(
    window: SampledState, ratios: Sequence[float], radius: float
) -> List[Tuple[float, FrameBounds]]:
    """Frame bounds on square lattices with alpha beta = ratio 2 pi hbar."""
    results = []
    for ratio in ratios:
        spacing = np.sqrt(2.0 * np.pi * window.grid.hbar * ratio)
        lattice = Lattice(radius=radius, alpha=spacing, beta=spacing)
        try:
            bounds = frame_bounds(WHSystem(window=window, lattice=lattice))
        except NoFrameError:
            bounds = FrameBounds(a=0.0, b=1.0)
        _logger.debug("density %.3g: ratio %.3e", ratio, bounds.ratio)
        results.append((float(ratio), bounds))
    return results
