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

"""Weyl quantization on a periodic grid (n = 1).

The operator of a symbol a has kernel

    K(x, y) = (2 pi hbar)^-1 int exp(i p (x - y) / hbar) a((x + y) / 2, p) dp

and is stored as the matrix K(x_j, x_k) dx. The p integral is the grid sum
over the momenta p_m, which makes the kernel periodic in x - y with period
N dx; pairs of points closer across the boundary than inside the box use the
midpoint on that side. De-quantization reads the kernel at the half-grid
points through zero-padded Fourier interpolation, the same scheme the
cross-Wigner transform uses, so the symbol of |psi)(phi| is
2 pi hbar W(psi, phi).
"""

import logging
from typing import Any, Optional

import numpy as np
from scipy import fft

from .config import threads_from_env
from .errors import InvalidDimensionError, InvalidInputError, SupportWarning, warn
from .models import (
    ComplexArray,
    DiscretizedOperator,
    Generator,
    GeneratorKind,
    PhaseSpaceFunction,
    SampleGrid,
    Symbol,
    SymbolKind,
)
from .phasespace import (
    cross_wigner,
    half_grid,
    standard_state,
    symplectic_fourier,
)

_logger = logging.getLogger(__name__)

_RESAMPLING_TOLERANCE = 1e-6


def _wavenumbers(grid: SampleGrid) -> Any:
    return 2.0 * np.pi * fft.fftfreq(grid.N, grid.dx)


def _midpoints(grid: SampleGrid) -> Any:
    """The 2N half-grid positions x0 + s dx / 2."""
    return grid.start + 0.5 * grid.dx * np.arange(2 * grid.N)


def _midpoint_index(N: int) -> Any:
    """Half-grid index of the midpoint of each pair (x_j, x_k) on the circle."""
    j, k = np.indices((N, N))
    s = j + k
    wrapped = np.abs(j - k) > N // 2
    return np.where(wrapped, np.where(s >= N, s - N, s + N), s)


def _symbol_on_midpoints(symbol: Symbol, grid: SampleGrid) -> ComplexArray:
    """Samples a(x_s, p_m) on the half grid in x and the full grid in p."""
    if symbol.kind == SymbolKind.SAMPLED:
        samples = symbol.samples
        assert samples is not None
        if (
            samples.values.shape == (grid.N, grid.N)
            and np.allclose(samples.x, grid.x)
            and np.allclose(samples.p, grid.p)
        ):
            return half_grid(samples.values, axis=0)
    xx, pp = np.meshgrid(_midpoints(grid), grid.p, indexing="ij")
    values = np.asarray(symbol(xx, pp), dtype=np.complex128)
    # the unpaired bin -N/2 stands for both ends of the momentum band
    nyquist = 0.5 * grid.N * grid.dp
    values[:, 0] = 0.5 * (
        values[:, 0] + np.asarray(symbol(xx[:, 0], nyquist), dtype=np.complex128)
    )
    return values


def weyl_quantize(symbol: Symbol, grid: SampleGrid) -> DiscretizedOperator:
    """Weyl operator of a symbol as an N x N matrix on the grid.

    Closed-form symbols are evaluated at the midpoints (x_j + x_k) / 2.
    Sampled symbols defined on the grid itself are interpolated there.

    Raises:
        InvalidInputError: If the symbol cannot be evaluated at the midpoints.
    """
    N = grid.N
    samples = _symbol_on_midpoints(symbol, grid)
    if not np.all(np.isfinite(samples)):
        raise InvalidInputError("symbol is not finite on the grid")
    workers = threads_from_env()
    kernel = fft.ifft(fft.ifftshift(samples, axes=1), axis=1, workers=workers)
    j, k = np.indices((N, N))
    matrix = kernel[_midpoint_index(N), (j - k) % N]
    _logger.debug("quantized %s symbol on %s points", symbol.kind, N)
    return DiscretizedOperator(grid, matrix, label="weyl")


def weyl_symbol(operator: DiscretizedOperator) -> Symbol:
    """Weyl symbol a(x, p) = int exp(-i p y / hbar) K(x + y/2, x - y/2) dy.

    Returns:
        A sampled symbol on the square grid of the operator.
    """
    grid = operator.grid
    N = grid.N
    fine = half_grid(half_grid(operator.matrix, axis=0), axis=1)
    rows = 2 * np.arange(N)[:, None]
    offsets = np.arange(-N // 2, N // 2)[None, :]
    plus, minus = rows + offsets, rows - offsets
    inside = (plus >= 0) & (plus < 2 * N) & (minus >= 0) & (minus < 2 * N)
    pairs = np.where(
        inside,
        fine[np.clip(plus, 0, 2 * N - 1), np.clip(minus, 0, 2 * N - 1)],
        0.0,
    )
    workers = threads_from_env()
    values = fft.fftshift(
        fft.fft(fft.ifftshift(pairs, axes=1), axis=1, workers=workers), axes=1
    )
    return Symbol(SymbolKind.SAMPLED, samples=PhaseSpaceFunction.on_grid(grid, values))


def moyal_star(a: Symbol, b: Symbol, grid: SampleGrid) -> Symbol:
    """Symbol of Op(a) Op(b), computed by composing the grid operators."""
    product = weyl_quantize(a, grid).compose(weyl_quantize(b, grid), label="star")
    return weyl_symbol(product)


def moyal_star_quadrature(
    a: Symbol,
    b: Symbol,
    z: Any,
    hbar: float = 1.0,
    *,
    points: int = 64,
    radius: Optional[float] = None,
) -> complex:
    """Star product at one point by the double phase-space integral.

    c(z) = (4 pi hbar)^-2 int int exp(i sigma(z', z'') / 2 hbar)
    a(z + z'/2) b(z - z''/2) dz' dz''

    The z'' integral factors into two one-dimensional transforms, so the
    cost is O(points^3) rather than O(points^4).
    """
    x, p = (float(v) for v in np.asarray(z, dtype=np.float64).reshape(2))
    radius = 14.0 * np.sqrt(hbar) if radius is None else float(radius)
    step = 2.0 * radius / points
    nodes = step * (np.arange(points) - points // 2)
    u, v = np.meshgrid(nodes, nodes, indexing="ij")
    b_values = np.asarray(b(x - 0.5 * u, p - 0.5 * v), dtype=np.complex128)
    # exp(i p' x'' / 2 hbar) and exp(-i x' p'' / 2 hbar)
    outer = np.exp(0.5j * np.outer(nodes, nodes) / hbar)
    inner = outer @ b_values
    transformed = outer.conj() @ inner.T
    a_values = np.asarray(a(x + 0.5 * u, p + 0.5 * v), dtype=np.complex128)
    total = np.sum(a_values * transformed) * step**4
    return complex(total / (4.0 * np.pi * hbar) ** 2)


def _shift_matrix(grid: SampleGrid, distance: float) -> ComplexArray:
    """Matrix of psi(x) -> psi(x - distance) on the periodic grid."""
    steps = distance / grid.dx
    if abs(steps - round(steps)) < 1e-12:
        identity = np.identity(grid.N, dtype=np.complex128)
        return np.roll(identity, int(round(steps)), axis=0)
    phases = np.exp(-1j * _wavenumbers(grid) * distance)
    identity = np.identity(grid.N)
    return fft.ifft(phases[:, None] * fft.fft(identity, axis=0), axis=0)


def heisenberg_matrix(z0: Any, grid: SampleGrid) -> DiscretizedOperator:
    """T(z0) psi(x) = exp(i (p0 x - p0 x0 / 2) / hbar) psi(x - x0).

    Exactly unitary; the Heisenberg relations hold to rounding when z0 is a
    point of the grid lattice (x0 a multiple of dx and p0 of dp).
    """
    x0, p0 = (float(v) for v in np.asarray(z0, dtype=np.float64).reshape(2))
    phase = np.exp(1j * (p0 * grid.x - 0.5 * p0 * x0) / grid.hbar)
    return DiscretizedOperator(
        grid, phase[:, None] * _shift_matrix(grid, x0), label="heisenberg"
    )


def grossmann_royer_matrix(z0: Any, grid: SampleGrid) -> DiscretizedOperator:
    """T_GR(z0) psi(x) = exp(2i p0 (x - x0) / hbar) psi(2 x0 - x)."""
    x0, p0 = (float(v) for v in np.asarray(z0, dtype=np.float64).reshape(2))
    if abs(grid.start + 0.5 * grid.N * grid.dx) > 1e-12 * grid.N * grid.dx:
        raise InvalidInputError("reflections need a grid centered on 0")
    parity = np.identity(grid.N, dtype=np.complex128)[(-np.arange(grid.N)) % grid.N]
    phase = np.exp(2j * p0 * (grid.x - x0) / grid.hbar)
    matrix = phase[:, None] * (_shift_matrix(grid, 2.0 * x0) @ parity)
    return DiscretizedOperator(grid, matrix, label="grossmann-royer")


def _free_flow(grid: SampleGrid, t: float) -> ComplexArray:
    """exp(-i t p^2 / 2 hbar), the lift of [[1, t], [0, 1]]."""
    k = _wavenumbers(grid)
    phases = np.exp(-0.5j * t * grid.hbar * k**2)
    return fft.ifft(phases[:, None] * fft.fft(np.identity(grid.N), axis=0), axis=0)


def _shear(grid: SampleGrid, P: float) -> ComplexArray:
    return np.diag(np.exp(-0.5j * P * grid.x**2 / grid.hbar))


def _scaling(grid: SampleGrid, L: float) -> ComplexArray:
    """sqrt|L| psi(L x) by trigonometric interpolation of the samples."""
    positions = L * grid.x - grid.start
    evaluation = np.exp(1j * np.outer(positions, _wavenumbers(grid))) / grid.N
    matrix = np.sqrt(abs(L)) * evaluation @ fft.fft(np.identity(grid.N), axis=0)
    probe = standard_state(grid)
    deviation = abs(np.linalg.norm(matrix @ probe.values) * np.sqrt(grid.dx) - 1.0)
    if deviation > _RESAMPLING_TOLERANCE:
        warn(
            _logger,
            SupportWarning,
            f"rescaling by {L} loses norm {deviation:.3e} on the grid",
        )
    return matrix


def metaplectic_matrix(generator: Generator, grid: SampleGrid) -> DiscretizedOperator:
    """Grid matrix of a metaplectic generator (or a Heisenberg translation).

    J is realized as V_1 exp(-i p^2 / 2 hbar) V_1, which matches
    (2 pi i hbar)^(-1/2) int exp(-i x x' / hbar) psi(x') dx' on the
    principal branch, so J phi_0 = exp(-i pi / 4) phi_0.

    Raises:
        InvalidDimensionError: If the generator acts on more than one
            degree of freedom.
    """
    if generator.n != 1:
        raise InvalidDimensionError("grid operators support n = 1 only")
    match generator.kind:
        case GeneratorKind.SHEAR:
            parameter = generator.required_parameter
            matrix = _shear(grid, float(parameter.reshape(-1)[0]))
        case GeneratorKind.SCALING:
            L = float(generator.required_parameter.reshape(-1)[0])
            if L == 0:
                raise InvalidInputError("scaling parameter must be nonzero")
            matrix = _scaling(grid, L)
        case GeneratorKind.ROTATION:
            shear = _shear(grid, 1.0)
            matrix = shear @ _free_flow(grid, 1.0) @ shear
        case _:
            return heisenberg_matrix(generator.required_parameter, grid)
    label = GeneratorKind(generator.kind).value
    return DiscretizedOperator(grid, matrix, label=label)


def weyl_quantize_gr(symbol: Symbol, grid: SampleGrid) -> DiscretizedOperator:
    """Op(a) = (pi hbar)^-1 int a(z0) T_GR(z0) dz0 by quadrature.

    The centers z0 run over the half grid in x and the full grid in p, so
    every reflection maps grid points onto grid points.
    """
    N = grid.N
    hbar = grid.hbar
    centers = _midpoints(grid)
    samples = _symbol_on_midpoints(symbol, grid)
    # sum over p of a(x_s, p) exp(2i p (x_l - x_s) / hbar)
    weighted = samples * np.exp(-2j * np.outer(centers, grid.p) / hbar)
    values = weighted @ np.exp(2j * np.outer(grid.x, grid.p) / hbar).T
    s, rows = np.indices((2 * N, N))
    columns = (s - rows) % N
    matrix = np.zeros((N, N), dtype=np.complex128)
    np.add.at(matrix, (rows, columns), values / N)
    return DiscretizedOperator(grid, matrix, label="weyl-gr")


def weyl_from_harmonic(symbol: Symbol, grid: SampleGrid) -> DiscretizedOperator:
    """Op(a) = (2 pi hbar)^-1 int a_sigma(z0) T(z0) dz0 over the grid lattice."""
    N = grid.N
    hbar = grid.hbar
    xx, pp = np.meshgrid(grid.x, grid.p, indexing="ij")
    sampled = PhaseSpaceFunction.on_grid(
        grid, np.asarray(symbol(xx, pp), dtype=np.complex128)
    )
    spectrum = symplectic_fourier(sampled).values
    # T(x_j, p_m) maps column l - (j - N/2) to row l
    weighted = spectrum * np.exp(-0.5j * np.outer(grid.x, grid.p) / hbar)
    values = weighted @ np.exp(1j * np.outer(grid.x, grid.p) / hbar).T
    j, rows = np.indices((N, N))
    columns = (rows - (j - N // 2)) % N
    matrix = np.zeros((N, N), dtype=np.complex128)
    np.add.at(matrix, (rows, columns), values / N)
    return DiscretizedOperator(grid, matrix, label="weyl-harmonic")


def expectation(symbol: Symbol, psi: Any, phi: Any) -> complex:
    """(Op(a) psi | phi) through the phase-space pairing int a W(psi, phi) dz."""
    transform = cross_wigner(psi, phi)
    xx, pp = np.meshgrid(transform.x, transform.p, indexing="ij")
    values = np.asarray(symbol(xx, pp), dtype=np.complex128)
    return complex(np.sum(values * transform.values) * transform.dx * transform.dp)
