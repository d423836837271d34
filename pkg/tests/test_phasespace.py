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

"""Tests for phase-space transforms on sampled states."""

import numpy as np
import pytest
from testing_framework import assert_close, gaussian, small_grid

from blobkit.errors import InvalidInputError, SupportWarning
from blobkit.gaussian_states import (
    covariance_matrix,
    wigner_closed_form,
    wigner_on_grid,
)
from blobkit.models import GaussianState
from blobkit.phasespace import (
    border_mass,
    convolve,
    cross_ambiguity,
    cross_husimi,
    cross_wigner,
    half_grid,
    husimi,
    inner_product,
    marginals,
    reflect,
    s0_norm,
    standard_state,
    standard_wigner,
    symplectic_fourier,
    translate,
    wigner,
    wigner_covariance,
    wigner_inner_product,
    wigner_moments,
)


def _reversed(values: np.ndarray) -> np.ndarray:
    """values(-x, -p) on a centered grid."""
    N = values.shape[0]
    index = (-np.arange(N)) % N
    return values[np.ix_(index, index)]


def test_standard_state_wigner() -> None:
    """W phi_0 is the normalized Gaussian exp(-|z|^2 / hbar) / (pi hbar)."""
    for hbar in (1.0, 0.25):
        grid = small_grid(hbar=hbar)
        transform = wigner(standard_state(grid))
        assert_close(standard_wigner(grid).values, transform.values, 1e-6, str(hbar))


def test_squeezed_state_wigner() -> None:
    """The grid Wigner function of psi_XY matches its closed form."""
    grid = small_grid()
    state = GaussianState(X=[[2.0]], Y=[[0.5]], z0=[0.5, -0.3])
    expected = wigner_on_grid(wigner_closed_form(state), grid)
    actual = wigner(gaussian(grid, X=2.0, Y=0.5, center=(0.5, -0.3)))
    assert_close(expected.values, actual.values, 1e-6)


def test_wigner_integral_and_marginals() -> None:
    """W psi integrates to one and its x marginal is |psi|^2."""
    grid = small_grid()
    psi = gaussian(grid, X=0.7, Y=-0.4, center=(-1.0, 0.5))
    transform = wigner(psi)
    assert_close(1.0, transform.integral().real, 1e-10, "integral")
    x_marginal, p_marginal = marginals(transform)
    assert_close(np.abs(psi.values) ** 2, x_marginal, 1e-8, "x marginal")
    assert_close(1.0, np.sum(p_marginal) * grid.dp, 1e-10, "p marginal")


def test_momentum_marginal_of_standard_state() -> None:
    """The p marginal of phi_0 is (pi hbar)^(-1/2) exp(-p^2 / hbar)."""
    grid = small_grid()
    _, p_marginal = marginals(wigner(standard_state(grid)))
    expected = np.exp(-(grid.p**2)) / np.sqrt(np.pi)
    assert_close(expected, p_marginal, 1e-8)


def test_cross_wigner_is_hermitian() -> None:
    """W(phi, psi) = conj W(psi, phi)."""
    grid = small_grid()
    psi = gaussian(grid, X=1.5, center=(0.3, 0.2))
    phi = gaussian(grid, X=0.8, Y=0.3, center=(-0.4, 0.1))
    assert_close(
        np.conj(cross_wigner(psi, phi).values), cross_wigner(phi, psi).values, 1e-12
    )


def test_moyal_identity() -> None:
    """int W(psi) W(phi) dz = |(psi | phi)|^2 / (2 pi hbar)."""
    grid = small_grid(hbar=0.5)
    psi = gaussian(grid, X=1.5, center=(0.3, 0.2))
    phi = gaussian(grid, X=0.8, Y=0.3, center=(-0.4, 0.1))
    pairing = wigner_inner_product(wigner(psi), wigner(phi)).real
    expected = abs(inner_product(psi, phi)) ** 2 / (2.0 * np.pi * grid.hbar)
    assert_close(expected, pairing, 1e-8)


def test_wigner_of_reflection() -> None:
    """W(psi(-x))(z) = W(psi)(-z)."""
    grid = small_grid()
    psi = gaussian(grid, X=1.3, Y=0.6, center=(1.0, -0.5))
    assert_close(psi.values, reflect(reflect(psi)).values, 0.0, "involution")
    assert_close(
        _reversed(wigner(psi).values), wigner(reflect(psi)).values, 1e-10, "wigner"
    )


def test_wigner_translation_covariance() -> None:
    """W(T(z0) psi) is W psi moved by z0 for lattice points z0."""
    grid = small_grid()
    psi = gaussian(grid, X=1.3, Y=0.6)
    assert wigner_covariance(psi, (4 * grid.dx, -3 * grid.dp)) <= 1e-9
    with pytest.raises(InvalidInputError):
        wigner_covariance(psi, (0.5 * grid.dx, 0.0))


def test_ambiguity_of_standard_state() -> None:
    """Amb phi_0 = exp(-|z|^2 / 4 hbar) / (2 pi hbar), the Fourier image of W phi_0."""
    grid = small_grid()
    xx, pp = np.meshgrid(grid.x, grid.p, indexing="ij")
    expected = np.exp(-(xx**2 + pp**2) / 4.0) / (2.0 * np.pi)
    phi = standard_state(grid)
    assert_close(expected, cross_ambiguity(phi, phi).values, 1e-6, "ambiguity")
    assert_close(
        expected, symplectic_fourier(wigner(phi)).values, 1e-6, "fourier of wigner"
    )


def test_ambiguity_at_the_origin_is_the_norm() -> None:
    """Amb(psi, psi)(0) = ||psi||^2 / (2 pi hbar)."""
    grid = small_grid(hbar=0.5)
    psi = gaussian(grid, X=1.7, Y=-0.4, center=(0.8, -0.6))
    transform = cross_ambiguity(psi, psi)
    origin = np.argmin(np.abs(transform.x)), np.argmin(np.abs(transform.p))
    expected = inner_product(psi, psi).real / (2.0 * np.pi * grid.hbar)
    assert_close(expected, transform.values[origin], 1e-10)


def test_ambiguity_moyal_identity() -> None:
    """Cross-ambiguity functions pair like cross-Wigner functions (Moyal)."""
    grid = small_grid(hbar=0.5)
    psi = gaussian(grid, X=1.5, center=(0.3, 0.2))
    phi = gaussian(grid, X=0.8, Y=0.3, center=(-0.4, 0.1))
    psi2 = gaussian(grid, X=1.1, Y=-0.2, center=(0.1, -0.3))
    phi2 = gaussian(grid, X=1.2, center=(-0.2, 0.4))
    pairing = wigner_inner_product(
        cross_ambiguity(psi, phi), cross_ambiguity(psi2, phi2)
    )
    expected = (
        inner_product(psi, psi2)
        * np.conj(inner_product(phi, phi2))
        / (2.0 * np.pi * grid.hbar)
    )
    assert_close(expected, pairing, 1e-8)


def test_symplectic_fourier_is_an_involution() -> None:
    """F F a = a on the grid."""
    grid = small_grid()
    rng = np.random.default_rng(7)
    function = wigner(standard_state(grid)).with_values(
        rng.normal(size=(grid.N, grid.N)) + 1j * rng.normal(size=(grid.N, grid.N))
    )
    twice = symplectic_fourier(symplectic_fourier(function))
    assert_close(function.values, twice.values, 1e-10)


def test_husimi_of_standard_state() -> None:
    """W phi_0 * W phi_0 = exp(-|z|^2 / 2 hbar) / (2 pi hbar)."""
    grid = small_grid()
    xx, pp = np.meshgrid(grid.x, grid.p, indexing="ij")
    expected = np.exp(-(xx**2 + pp**2) / 2.0) / (2.0 * np.pi)
    assert_close(expected, husimi(standard_state(grid)).values, 1e-8)


def test_husimi_is_nonnegative() -> None:
    """Smoothing a Wigner function by W phi_0 gives a nonnegative density."""
    grid = small_grid()
    psi = gaussian(grid, X=4.0, Y=1.5, center=(1.0, 1.0))
    smoothed = husimi(psi)
    assert float(np.min(smoothed.values)) >= -1e-12
    assert_close(1.0, smoothed.integral().real, 1e-8)


def test_cross_husimi() -> None:
    """The diagonal is the Husimi function and the integral is (psi | phi)."""
    grid = small_grid()
    psi = gaussian(grid, X=1.5, center=(0.3, 0.2))
    phi = gaussian(grid, X=0.8, Y=0.3, center=(-0.4, 0.1))
    assert_close(husimi(psi).values, cross_husimi(psi, psi).values.real, 1e-12)
    mixed = cross_husimi(psi, phi)
    assert_close(inner_product(psi, phi), mixed.integral(), 1e-8, "integral")
    assert_close(
        np.conj(mixed.values), cross_husimi(phi, psi).values, 1e-12, "hermitian"
    )
    window = gaussian(grid, X=2.0)
    assert_close(
        husimi(psi, window).values,
        cross_husimi(psi, psi, window).values.real,
        1e-12,
        "window",
    )


def test_convolution_needs_matching_grids() -> None:
    """Kernels must share the grid of the convolved function."""
    first = standard_wigner(small_grid())
    second = standard_wigner(small_grid(N=64))
    with pytest.raises(InvalidInputError):
        convolve(first, second)


def test_moments_of_a_wigner_function() -> None:
    """Mean and covariance of W psi_XY are z0 and (hbar / 2) G^-1."""
    grid = small_grid()
    state = GaussianState(X=[[2.0]], Y=[[0.5]], z0=[0.5, -0.3])
    moments = wigner_moments(wigner(gaussian(grid, X=2.0, Y=0.5, center=(0.5, -0.3))))
    assert_close(state.center, moments.mean, 1e-8, "mean")
    assert_close(covariance_matrix(state), moments.sigma, 1e-8, "sigma")


def test_s0_norm_of_standard_state() -> None:
    """The window norm of phi_0 is one."""
    grid = small_grid()
    phi = standard_state(grid)
    assert_close(1.0, s0_norm(phi, phi), 1e-8)
    assert border_mass(wigner(phi)) <= 1e-12


def test_half_grid_keeps_samples() -> None:
    """Even half-grid entries are the original samples."""
    grid = small_grid()
    psi = translate(standard_state(grid), (0.4, 0.9))
    fine = half_grid(psi.values)
    assert_close(psi.values, fine[::2], 1e-12)


def test_edge_mass_warns() -> None:
    """States touching the grid edge raise a SupportWarning."""
    grid = small_grid()
    psi = gaussian(grid, center=(11.5, 0.0))
    with pytest.warns(SupportWarning):
        wigner(psi)


def test_states_on_different_grids() -> None:
    """Cross transforms need one shared grid."""
    psi = standard_state(small_grid())
    phi = standard_state(small_grid(N=64))
    with pytest.raises(InvalidInputError):
        cross_wigner(psi, phi)
