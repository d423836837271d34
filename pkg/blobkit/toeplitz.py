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

"""Toeplitz (anti-Wick) quantization with arbitrary windows (n = 1).

Two routes compute the same operator. The direct route sums a(z) |phi_z)(phi_z|
over a square quadrature grid of phase-space points; the Weyl route quantizes
the smoothed symbol a * W phi on the grid. The Weyl route is the fast one, the
direct route is kept to validate it.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import eigh

from .config import MAX_QUADRATURE_SPACING, QUADRATURE_SPACING
from .errors import InvalidInputError, ResolutionError
from .gabor import translates, window_width
from .gaussian_states import sample, wigner_closed_form, wigner_on_grid
from .models import (
    DensityMatrix,
    DiscretizedOperator,
    FloatArray,
    GaussianState,
    PhaseSpaceFunction,
    SampledState,
    SampleGrid,
    SweepPoint,
    Symbol,
    SymbolKind,
    ToeplitzSpec,
)
from .phasespace import convolve, s0_norm, standard_state, symplectic_fourier, wigner
from .weyl import weyl_quantize

_logger = logging.getLogger(__name__)

# Points closer than this many window widths to the grid border are left out
# of sup-norm measurements, where the cyclic convolution wraps around.
_SWEEP_MARGIN_WIDTHS = 6.0


def window_state(
    window: Union[SampledState, GaussianState], grid: SampleGrid
) -> SampledState:
    """The window as unit-norm samples on the grid.

    Raises:
        InvalidInputError: If the window is not normalized or has no finite
            S0 norm on the grid.
    """
    state = sample(window, grid) if isinstance(window, GaussianState) else window
    if not state.grid.matches(grid):
        raise InvalidInputError("window lives on a different grid")
    if abs(state.norm - 1.0) > 1e-8:
        raise InvalidInputError(f"window must have unit norm, got {state.norm:.12f}")
    if not np.isfinite(s0_norm(state, standard_state(grid))):
        raise InvalidInputError("window has no finite S0 norm on the grid")
    return state


def quadrature_nodes(spec: ToeplitzSpec, window: SampledState) -> Tuple[Any, float]:
    """Phase-space quadrature points, shape (Q^2, 2), and their spacing.

    Raises:
        ResolutionError: If the spacing exceeds sqrt(hbar) / 2.
    """
    root = np.sqrt(window.grid.hbar)
    spacing = spec.spacing
    if spacing is None:
        spacing = min(QUADRATURE_SPACING * root, window_width(window) / 6.0)
    if spacing > MAX_QUADRATURE_SPACING * root:
        raise ResolutionError(
            f"quadrature spacing {spacing:.3g} exceeds {MAX_QUADRATURE_SPACING} "
            f"sqrt(hbar) = {MAX_QUADRATURE_SPACING * root:.3g}"
        )
    count = int(spec.quadrature_n)
    axis = spacing * (np.arange(count) - count // 2)
    xx, pp = np.meshgrid(axis, axis, indexing="ij")
    return np.stack([xx.ravel(), pp.ravel()], axis=1), float(spacing)


def _coherent_sum(
    weights: Any, window: SampledState, nodes: Any, spacing: float
) -> Any:
    states = translates(window, nodes)
    return (states.T * weights) @ states.conj() * window.grid.dx * spacing**2


def toeplitz_quantize(spec: ToeplitzSpec, grid: SampleGrid) -> DiscretizedOperator:
    """(2 pi hbar)^-1 sum_z a(z) |phi_z)(phi_z| dz over the quadrature grid."""
    window = window_state(spec.window, grid)
    nodes, spacing = quadrature_nodes(spec, window)
    weights = np.asarray(spec.symbol(nodes[:, 0], nodes[:, 1]), dtype=np.complex128)
    if not np.all(np.isfinite(weights)):
        raise InvalidInputError("symbol is not finite on the quadrature grid")
    matrix = _coherent_sum(weights, window, nodes, spacing) / (2.0 * np.pi * grid.hbar)
    _logger.debug(
        "toeplitz operator from %s coherent states, spacing %.3g",
        nodes.shape[0],
        spacing,
    )
    return DiscretizedOperator(grid, matrix, label="toeplitz")


def smoothing_kernel(
    window: Union[SampledState, GaussianState], grid: SampleGrid
) -> PhaseSpaceFunction:
    """W phi on the phase-space grid; closed form for Gaussian windows."""
    if isinstance(window, GaussianState):
        return wigner_on_grid(wigner_closed_form(window), grid)
    return wigner(window_state(window, grid))


def anti_wick_symbol(
    symbol: Symbol,
    window: Union[SampledState, GaussianState],
    grid: SampleGrid,
) -> PhaseSpaceFunction:
    """The smoothed symbol a * W phi as a cyclic grid convolution."""
    xx, pp = np.meshgrid(grid.x, grid.p, indexing="ij")
    samples = PhaseSpaceFunction.on_grid(grid, symbol(xx, pp))
    return convolve(samples, smoothing_kernel(window, grid))


def toeplitz_via_weyl(spec: ToeplitzSpec, grid: SampleGrid) -> DiscretizedOperator:
    """Weyl quantization of a * W phi."""
    window_state(spec.window, grid)
    smoothed = anti_wick_symbol(spec.symbol, spec.window, grid)
    operator = weyl_quantize(Symbol(SymbolKind.SAMPLED, samples=smoothed), grid)
    operator.label = "toeplitz-weyl"
    return operator


def blob_operator(
    symbol: Symbol,
    X: Any,
    Y: Any,
    grid: SampleGrid,
    *,
    quadrature_n: int = 64,
    spacing: Optional[float] = None,
) -> DiscretizedOperator:
    """Toeplitz operator with the Gaussian window psi_XY."""
    state = GaussianState(X=X, Y=Y, hbar=grid.hbar)
    spec = ToeplitzSpec(
        symbol=symbol, window=state, quadrature_n=quadrature_n, spacing=spacing
    )
    operator = toeplitz_quantize(spec, grid)
    operator.label = "blob"
    return operator


def _spectrum(matrix: Any, grid: SampleGrid) -> Tuple[FloatArray, List[SampledState]]:
    eigenvalues, vectors = eigh(0.5 * (matrix + matrix.conj().T))
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues, vectors = eigenvalues[order], vectors[:, order]
    significant = eigenvalues > 1e-10 * max(eigenvalues[0], 1e-300)
    states = [
        SampledState(grid, vectors[:, j] / np.sqrt(grid.dx))
        for j in np.flatnonzero(significant)
    ]
    return eigenvalues, states


def density_matrix(
    mu: Symbol,
    window: Union[SampledState, GaussianState],
    grid: SampleGrid,
    *,
    quadrature_n: int = 64,
    spacing: Optional[float] = None,
) -> DensityMatrix:
    """rho = 2 pi hbar Op_TO(mu) for a phase-space probability density mu.

    Raises:
        InvalidInputError: If mu is negative or does not integrate to 1 on
            the quadrature grid.
    """
    state = window_state(window, grid)
    spec = ToeplitzSpec(
        symbol=mu, window=state, quadrature_n=quadrature_n, spacing=spacing
    )
    nodes, step = quadrature_nodes(spec, state)
    weights = np.real(np.asarray(mu(nodes[:, 0], nodes[:, 1]), dtype=np.complex128))
    total = float(weights.sum() * step**2)
    if np.min(weights) < -1e-12 or abs(total - 1.0) > 1e-8:
        raise InvalidInputError(
            f"mu must be a probability density, got integral {total:.10f} "
            f"and minimum {np.min(weights):.3e}"
        )
    matrix = _coherent_sum(weights, state, nodes, step)
    eigenvalues, states = _spectrum(matrix, grid)
    result = DensityMatrix(
        operator=DiscretizedOperator(grid, matrix, label="density"),
        trace=float(np.real(np.trace(matrix))),
        min_eigenvalue=float(eigenvalues[-1]),
        spectrum=eigenvalues,
        eigenstates=states,
    )
    _logger.info(
        "density matrix: trace %.8f, min eigenvalue %.3e, purity %.6f",
        result.trace,
        result.min_eigenvalue,
        result.purity,
    )
    return result


def trace_three_ways(
    density: DensityMatrix,
    mu: Symbol,
    window: Union[SampledState, GaussianState],
) -> Dict[str, float]:
    """Tr rho as a matrix trace, as int mu * W phi and through F mu(0) F W phi(0)."""
    grid = density.operator.grid
    xx, pp = np.meshgrid(grid.x, grid.p, indexing="ij")
    samples = PhaseSpaceFunction.on_grid(grid, np.real(mu(xx, pp)))
    kernel = smoothing_kernel(window, grid)
    smoothed = convolve(samples, kernel)
    center = grid.N // 2
    product = (
        symplectic_fourier(samples).values[center, center]
        * symplectic_fourier(kernel).values[center, center]
    )
    return {
        "matrix": density.trace,
        "convolution": float(np.real(smoothed.integral())),
        "fourier": float(np.real(product) * (2.0 * np.pi * grid.hbar) ** 2),
    }


def hilbert_schmidt_check(spec: ToeplitzSpec, grid: SampleGrid) -> Tuple[float, float]:
    """Frobenius norm of the operator and (2 pi hbar)^-1/2 ||a * W phi||_L2."""
    operator = toeplitz_quantize(spec, grid)
    smoothed = anti_wick_symbol(spec.symbol, spec.window, grid)
    expected = smoothed.l2_norm() / np.sqrt(2.0 * np.pi * grid.hbar)
    return float(np.linalg.norm(operator.matrix)), float(expected)


def spectral_identity_residual(
    density: DensityMatrix,
    mu: Symbol,
    window: Union[SampledState, GaussianState],
) -> float:
    """Max |mu * W phi - sum_j lambda_j W phi_j| on the phase-space grid."""
    grid = density.operator.grid
    xx, pp = np.meshgrid(grid.x, grid.p, indexing="ij")
    samples = PhaseSpaceFunction.on_grid(grid, np.real(mu(xx, pp)))
    smoothed = convolve(samples, smoothing_kernel(window, grid)).values
    mixture = np.zeros((grid.N, grid.N))
    for weight, state in zip(density.spectrum, density.eigenstates):
        mixture += weight * wigner(state).values
    return float(np.max(np.abs(smoothed - mixture)))


def _interior(function: PhaseSpaceFunction, margin: float) -> Any:
    xx, pp = np.meshgrid(function.x, function.p, indexing="ij")
    x_edge = min(-function.x[0], function.x[-1]) - margin
    p_edge = min(-function.p[0], function.p[-1]) - margin
    return (np.abs(xx) <= x_edge) & (np.abs(pp) <= p_edge)


def semiclassical_sweep(
    symbol: Symbol,
    X: Any,
    Y: Any,
    hbars: Sequence[float],
    *,
    grid_n: int = 512,
    domain: float = 12.0,
) -> List[SweepPoint]:
    """Sup-norm distance between a * W psi_XY and a for each hbar.

    The maximum runs over grid points away from the border of the
    phase-space grid.
    """
    points = []
    for hbar in hbars:
        grid = SampleGrid.centered(hbar=hbar, N=grid_n, domain=domain)
        state = GaussianState(X=X, Y=Y, hbar=hbar)
        smoothed = anti_wick_symbol(symbol, state, grid)
        xx, pp = np.meshgrid(grid.x, grid.p, indexing="ij")
        difference = np.abs(smoothed.values - symbol(xx, pp))
        margin = _SWEEP_MARGIN_WIDTHS * window_width(sample(state, grid))
        inside = _interior(smoothed, margin)
        deviation = float(np.max(difference[inside])) if np.any(inside) else 0.0
        _logger.info("hbar=%.6g: deviation %.6e", hbar, deviation)
        points.append(SweepPoint(hbar=float(hbar), deviation=deviation))
    return points
