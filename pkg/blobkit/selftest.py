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

"""The invariant suite behind ``blobkit selftest``.

Each group below exercises one module against an analytic or brute-force
oracle and yields named checks. Sizes are reduced so that the whole suite
runs in well under a minute on the default grid.
"""

import logging
from typing import Callable, Iterator, List, Tuple

import numpy as np

from .blobs import blobs_equal, ellipsoid_capacity, uncertainty_psd, uncertainty_rs
from .gabor import density_sweep, expand, interior_basis
from .gaussian_states import (
    eigen_residual,
    from_blob,
    phase_evolution_error,
    sample,
    to_blob,
    wigner_closed_form,
    wigner_on_grid,
)
from .models import (
    Check,
    GaussianState,
    Generator,
    Lattice,
    QuantumBlob,
    SampleGrid,
    Symbol,
    SymbolKind,
    SymplecticMatrix,
    ToeplitzSpec,
    WHSystem,
)
from .phasespace import (
    inner_product,
    marginals,
    standard_state,
    wigner,
    wigner_inner_product,
)
from .report_tracker import ReportTracker
from .symplectic import (
    generator_matrix,
    is_symplectic_rotation,
    pre_iwasawa,
    random_symplectic,
    random_symplectic_rotation,
    reconstruct,
    williamson_eigenvalues,
)
from .toeplitz import (
    anti_wick_symbol,
    density_matrix,
    semiclassical_sweep,
    spectral_identity_residual,
    toeplitz_quantize,
    toeplitz_via_weyl,
    trace_three_ways,
)
from .weyl import metaplectic_matrix, weyl_quantize

_logger = logging.getLogger(__name__)

CheckGroup = Callable[[SampleGrid, int], Iterator[Check]]


def _random_state(rng: np.random.Generator, hbar: float) -> GaussianState:
    root = np.sqrt(hbar)
    return GaussianState(
        X=[[rng.uniform(0.5, 2.0)]],
        Y=[[rng.uniform(-1.0, 1.0)]],
        z0=rng.uniform(-1.5, 1.5, size=2) * root,
        hbar=hbar,
    )


def _mixture(rng: np.random.Generator, hbar: float, count: int = 3) -> Symbol:
    components = []
    for _ in range(count):
        center = rng.uniform(-1.5, 1.5, size=2) * np.sqrt(hbar)
        spread = rng.uniform(0.5, 1.5)
        components.append(
            {
                "center": center.tolist(),
                "matrix": (np.eye(2) / (spread * hbar)).tolist(),
                "amplitude": float(rng.uniform(0.2, 1.0)),
            }
        )
    return Symbol(SymbolKind.MIXTURE, {"components": components})


def _applied_norm(matrix: np.ndarray, state: np.ndarray, dx: float) -> float:
    return float(np.linalg.norm(matrix @ state) * np.sqrt(dx))


def symplectic_checks(grid: SampleGrid, seed: int) -> Iterator[Check]:
    """Pre-Iwasawa roundtrips and the structure of their factors."""
    del grid
    worst = 0.0
    structure = True
    for n in (1, 2, 3):
        for k in range(40):
            S = random_symplectic(n, seed + 1000 * n + k).S
            factors = pre_iwasawa(S)
            worst = max(worst, float(np.max(np.abs(reconstruct(factors) - S))))
            structure &= is_symplectic_rotation(factors.R.S)
            structure &= bool(np.all(np.linalg.eigvalsh(factors.L) > 0))
            structure &= bool(np.allclose(factors.P, factors.P.T, atol=1e-12))
    yield Check.at_most("pre_iwasawa_roundtrip", worst, 1e-9)
    yield Check.holds("pre_iwasawa_factor_structure", structure)


def uncertainty_checks(grid: SampleGrid, seed: int) -> Iterator[Check]:
    """The PSD, Williamson and capacity forms of the uncertainty principle agree."""
    hbar = grid.hbar
    rng = np.random.default_rng(seed)
    disagreements = 0
    for n in (1, 2, 3):
        for k in range(30):
            S = random_symplectic(n, seed + 7 * k + n).S
            low = rng.uniform(0.3, 0.9, size=n)
            high = rng.uniform(1.1, 3.0, size=n)
            d = np.where(rng.random(n) < 0.5, low, high) * 0.5 * hbar
            sigma = S @ np.diag(np.concatenate([d, d])) @ S.T
            sigma = 0.5 * (sigma + sigma.T)
            psd = uncertainty_psd(sigma, hbar)
            williamson = williamson_eigenvalues(sigma).minimum >= 0.5 * hbar
            capacity = ellipsoid_capacity(sigma, hbar) >= np.pi * hbar
            disagreements += int(not psd == williamson == capacity)
    yield Check.at_most("uncertainty_equivalence", disagreements, 0)
    K = np.fliplr(np.eye(4))
    sigma = 0.5 * hbar * (np.eye(4) + 0.5 * K)
    yield Check.holds(
        "rs1_without_rs2",
        all(uncertainty_rs(sigma, hbar)) and not uncertainty_psd(sigma, hbar),
    )


def blob_checks(grid: SampleGrid, seed: int) -> Iterator[Check]:
    """Blobs survive the state roundtrip and ignore rotations."""
    hbar = grid.hbar
    rng = np.random.default_rng(seed + 1)
    roundtrip = True
    quotient = True
    for n in (1, 2, 3):
        for k in range(20):
            S = random_symplectic(n, seed + 31 * k + n)
            blob = QuantumBlob(S=S, z0=rng.normal(size=2 * n), hbar=hbar)
            roundtrip &= blobs_equal(blob, to_blob(from_blob(blob)))
            R = random_symplectic_rotation(n, seed + k)
            rotated = QuantumBlob(
                S=SymplecticMatrix(S.S @ R.S), z0=blob.center, hbar=hbar
            )
            quotient &= blobs_equal(blob, rotated)
    yield Check.holds("blob_state_roundtrip", roundtrip)
    yield Check.holds("blob_rotation_quotient", quotient)


def wigner_checks(grid: SampleGrid, seed: int) -> Iterator[Check]:
    """Grid Wigner transforms against closed forms and the Moyal identity."""
    hbar = grid.hbar
    rng = np.random.default_rng(seed + 2)
    standard = wigner(standard_state(grid)).values.real
    xx, pp = np.meshgrid(grid.x, grid.p, indexing="ij")
    exact = np.exp(-(xx**2 + pp**2) / hbar) / (np.pi * hbar)
    yield Check.at_most("wigner_standard", np.max(np.abs(standard - exact)), 1e-6)

    worst_closed = 0.0
    worst_moyal = 0.0
    worst_marginal = 0.0
    for _ in range(5):
        first, second = _random_state(rng, hbar), _random_state(rng, hbar)
        psi, phi = sample(first, grid), sample(second, grid)
        w_psi, w_phi = wigner(psi), wigner(phi)
        closed = wigner_on_grid(wigner_closed_form(first), grid).values
        worst_closed = max(worst_closed, float(np.max(np.abs(w_psi.values - closed))))
        overlap = abs(inner_product(psi, phi)) ** 2
        pairing = 2.0 * np.pi * hbar * wigner_inner_product(w_psi, w_phi).real
        worst_moyal = max(worst_moyal, abs(overlap - pairing) / max(overlap, 1e-3))
        x_marginal, _ = marginals(w_psi)
        density = np.abs(psi.values) ** 2
        worst_marginal = max(
            worst_marginal,
            float(np.max(np.abs(x_marginal.real - density)) / np.max(density)),
        )
    yield Check.at_most("wigner_closed_form", worst_closed, 1e-6)
    yield Check.at_most("moyal_identity", worst_moyal, 1e-6)
    yield Check.at_most("wigner_marginal", worst_marginal, 1e-6)


def canonical_group_checks(grid: SampleGrid, seed: int) -> Iterator[Check]:
    """psi_XY is an eigenstate of H_XY and evolves by a global phase."""
    rng = np.random.default_rng(seed + 3)
    residual = 0.0
    for _ in range(3):
        X, Y = rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0)
        residual = max(residual, eigen_residual([[X]], [[Y]], grid))
    yield Check.at_most("eigen_residual", residual, 1e-6)
    evolution = phase_evolution_error([[1.2]], [[0.4]], 0.1, grid)
    yield Check.at_most("phase_evolution", evolution, 1e-4)


def weyl_checks(grid: SampleGrid, seed: int) -> Iterator[Check]:
    """Identity, oscillator spectrum, commutator and symplectic covariance."""
    hbar = grid.hbar
    identity = weyl_quantize(Symbol.constant(1.0), grid)
    yield Check.at_most(
        "weyl_identity", identity.max_abs_diff(np.identity(grid.N)), 1e-8
    )

    oscillator = weyl_quantize(Symbol.polynomial([[2, 0, 0.5], [0, 2, 0.5]]), grid)
    levels = np.linalg.eigvalsh(oscillator.matrix)[:6]
    expected = hbar * (np.arange(6) + 0.5)
    yield Check.at_most(
        "oscillator_spectrum", np.max(np.abs(levels - expected)), 1e-5
    )

    psi = standard_state(grid).values
    position = weyl_quantize(Symbol.polynomial([[1, 0, 1.0]]), grid).matrix
    momentum = weyl_quantize(Symbol.polynomial([[0, 1, 1.0]]), grid).matrix
    commutator = position @ momentum - momentum @ position
    yield Check.at_most(
        "canonical_commutator",
        _applied_norm(commutator - 1j * hbar * np.identity(grid.N), psi, grid.dx),
        1e-6,
    )

    rng = np.random.default_rng(seed + 4)
    symbol = Symbol.gaussian(
        center=rng.uniform(-0.5, 0.5, size=2) * np.sqrt(hbar),
        matrix=np.array([[0.5, 0.1], [0.1, 0.4]]) / hbar,
    )
    operator = weyl_quantize(symbol, grid).matrix
    for generator in (
        Generator.shear([[0.5]]),
        Generator.scaling([[1.25]]),
        Generator.rotation(),
    ):
        S_hat = metaplectic_matrix(generator, grid).matrix
        S_inverse = np.linalg.inv(generator_matrix(generator))
        moved = weyl_quantize(symbol.composed(S_inverse), grid).matrix
        conjugated = S_hat @ operator @ S_hat.conj().T
        yield Check.at_most(
            f"symplectic_covariance_{generator.kind.value}",
            _applied_norm(conjugated - moved, psi, grid.dx),
            1e-5,
        )


def gabor_checks(grid: SampleGrid, seed: int) -> Iterator[Check]:
    """Frame-bound collapse across the critical density and dual reconstruction."""
    del seed
    hbar = grid.hbar
    root = np.sqrt(hbar)
    sweep_grid = SampleGrid.centered(hbar=hbar, N=2048, domain=44.0)
    sweep = density_sweep(
        standard_state(sweep_grid), (0.5, 0.8, 1.25, 2.0), radius=40.0 * root
    )
    ratios = [bounds.ratio for _, bounds in sweep]
    yield Check.holds(
        "frame_ratio_decreasing",
        all(later <= earlier + 1e-10 for earlier, later in zip(ratios, ratios[1:])),
        ratios=ratios,
    )
    drop = ratios[1] / max(ratios[2], 1e-300)
    yield Check.holds("frame_ratio_drop", drop >= 100.0, drop=drop)

    small = SampleGrid.centered(hbar=hbar, N=256, domain=16.0)
    spacing = np.sqrt(np.pi * hbar)
    system = WHSystem(
        window=standard_state(small),
        lattice=Lattice(radius=12.0 * root, alpha=spacing, beta=spacing),
    )
    shifted = GaussianState(X=[[1.0]], z0=[0.5 * root, -0.3 * root], hbar=hbar)
    target = sample(shifted, small)
    expansion = expand(target, system)
    yield Check.at_most("dual_reconstruction", expansion.relative_error, 1e-6)


def toeplitz_checks(grid: SampleGrid, seed: int) -> Iterator[Check]:
    """Direct and smoothed-Weyl Toeplitz routes, identity and positivity."""
    hbar = grid.hbar
    spacing = 0.25 * np.sqrt(hbar)
    rng = np.random.default_rng(seed + 5)
    windows = (
        GaussianState(X=[[1.0]], hbar=hbar),
        GaussianState(X=[[2.0]], Y=[[0.5]], hbar=hbar),
    )
    gap = 0.0
    lowest = np.inf
    for window in windows:
        for _ in range(2):
            spec = ToeplitzSpec(
                symbol=_mixture(rng, hbar), window=window, spacing=spacing
            )
            direct = toeplitz_quantize(spec, grid)
            gap = max(gap, direct.max_abs_diff(toeplitz_via_weyl(spec, grid)))
            lowest = min(lowest, float(np.linalg.eigvalsh(direct.matrix)[0]))
    yield Check.at_most("toeplitz_weyl_agreement", gap, 1e-4)
    yield Check.holds("toeplitz_positivity", lowest >= -1e-9, minimum=lowest)

    unit = toeplitz_quantize(
        ToeplitzSpec(
            symbol=Symbol.constant(1.0), window=windows[0], spacing=spacing
        ), grid
    )
    basis = interior_basis(grid, 3.0 * np.sqrt(hbar))
    section = basis.conj().T @ unit.matrix @ basis * grid.dx
    yield Check.at_most(
        "toeplitz_identity",
        np.max(np.abs(section - np.identity(basis.shape[1]))),
        1e-4,
    )


def density_checks(grid: SampleGrid, seed: int) -> Iterator[Check]:
    """Trace, positivity and spectral identity of a blob density matrix."""
    del seed
    hbar = grid.hbar
    root = np.sqrt(hbar)
    mu = Symbol.gaussian(
        center=(0.5 * root, -0.3 * root),
        matrix=np.eye(2) / (2.0 * hbar),
        amplitude=1.0 / (2.0 * np.pi * hbar),
    )
    window = GaussianState(X=[[1.0]], hbar=hbar)
    density = density_matrix(mu, window, grid, spacing=0.25 * root)
    traces = trace_three_ways(density, mu, window)
    yield Check.at_most(
        "density_trace",
        max(abs(value - 1.0) for value in traces.values()),
        1e-4,
        **traces,
    )
    yield Check.holds("density_positive", density.min_eigenvalue >= -1e-9)
    yield Check.at_most(
        "density_spectral_identity",
        spectral_identity_residual(density, mu, window),
        1e-3,
    )


def semiclassical_checks(grid: SampleGrid, seed: int) -> Iterator[Check]:
    """Blob smoothing converges to the symbol as hbar shrinks."""
    del seed
    symbol = Symbol(SymbolKind.SINE_PRODUCT, {"kx": 1.0, "kp": 1.0})
    points = semiclassical_sweep(
        symbol, [[1.0]], [[0.0]], (1.0, 0.5, 0.25, 0.125), grid_n=256
    )
    deviations = [point.deviation for point in points]
    yield Check.holds(
        "semiclassical_decreasing",
        all(b < a for a, b in zip(deviations, deviations[1:])),
        deviations=deviations,
    )
    yield Check.at_most("semiclassical_ratio", deviations[-1] / deviations[0], 0.2)

    quadratic = Symbol.polynomial([[2, 0, 1.0], [0, 2, 1.0]])
    window = GaussianState(X=[[1.0]], hbar=grid.hbar)
    smoothed = anti_wick_symbol(quadratic, window, grid)
    xx, pp = np.meshgrid(grid.x, grid.p, indexing="ij")
    edge = 0.5 * min(grid.x[-1], grid.p[-1])
    inside = (np.abs(xx) <= edge) & (np.abs(pp) <= edge)
    error = np.abs(smoothed.values.real - (xx**2 + pp**2 + grid.hbar))[inside]
    yield Check.at_most("quadratic_moment", float(np.max(error)), 1e-8)


SUITE: List[Tuple[str, CheckGroup]] = [
    ("symplectic", symplectic_checks),
    ("uncertainty", uncertainty_checks),
    ("blobs", blob_checks),
    ("wigner", wigner_checks),
    ("canonical_group", canonical_group_checks),
    ("weyl", weyl_checks),
    ("gabor", gabor_checks),
    ("toeplitz", toeplitz_checks),
    ("density", density_checks),
    ("semiclassical", semiclassical_checks),
]


def run_selftest(
    tracker: ReportTracker,
    grid: SampleGrid,
    seed: int = 0,
    groups: Tuple[str, ...] = (),
) -> None:
    """Run the suite (or the named groups of it) and log every check."""
    for name, group in SUITE:
        if groups and name not in groups:
            continue
        _logger.debug("running check group %s", name)
        for check in group(grid, seed):
            tracker.log_check(check)
