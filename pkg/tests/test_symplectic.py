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

"""Tests for the symplectic linear algebra module.

This module checks the fixed conventions, the pre-Iwasawa factorization and
the Williamson spectrum on hand-computed and random symplectic matrices.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from testing_framework import _assert_equals, assert_close

from blobkit.errors import InvalidDimensionError, InvalidInputError
from blobkit.models import Generator
from blobkit.symplectic import (
    as_symplectic,
    block_conditions,
    generator_matrix,
    is_symplectic,
    is_symplectic_rotation,
    pre_iwasawa,
    random_symplectic,
    random_symplectic_rotation,
    reconstruct,
    rotation_matrix,
    scaling_matrix,
    shear_matrix,
    standard_J,
    symplectic_form_value,
    symplectic_inverse,
    williamson_eigenvalues,
)


def test_standard_form_convention() -> None:
    """J = [[0, I], [-I, 0]] squares to -I."""
    assert_close([[0.0, 1.0], [-1.0, 0.0]], standard_J(1).J, 0.0, "J")
    for n in (1, 2, 3):
        J = standard_J(n).J
        assert_close(-np.identity(2 * n), J @ J, 0.0, f"J^2 for n={n}")
    _assert_equals(1.0, symplectic_form_value([1.0, 0.0], [0.0, 1.0]), "sigma")


def test_standard_form_rejects_zero_dimension() -> None:
    """n = 0 has no standard form."""
    with pytest.raises(InvalidDimensionError):
        standard_J(0)


def test_is_symplectic_examples() -> None:
    """J is symplectic, a determinant-2 scaling is not."""
    assert is_symplectic(standard_J(1).J)
    assert not is_symplectic(np.diag([2.0, 1.0]))
    with pytest.raises(InvalidDimensionError):
        is_symplectic(np.identity(3))


def test_generators_are_symplectic() -> None:
    """Shears, scalings, rotations and their products lie in Sp(n)."""
    P = np.array([[1.0, 0.3], [0.3, -0.5]])
    L = np.array([[2.0, 0.1], [0.0, 0.7]])
    angle = 0.4
    R = rotation_matrix(np.cos(angle) * np.eye(2), np.sin(angle) * np.eye(2))
    product = np.identity(4)
    for factor in (shear_matrix(P), scaling_matrix(L), R, standard_J(2).J):
        assert is_symplectic(factor)
        product = factor @ product
    assert is_symplectic(product, tol=1e-9)
    conditions = block_conditions(product)
    assert conditions["transpose_blocks"] < 1e-9
    assert conditions["row_blocks"] < 1e-9


def test_generator_matrix_matches_builders() -> None:
    """Generator records map to the matrix builders."""
    assert_close(shear_matrix([[0.5]]), generator_matrix(Generator.shear([[0.5]])), 0.0)
    assert_close(
        scaling_matrix([[2.0]]), generator_matrix(Generator.scaling([[2.0]])), 0.0
    )
    assert_close(standard_J(1).J, generator_matrix(Generator.rotation()), 0.0)
    with pytest.raises(InvalidInputError):
        generator_matrix(Generator.translation([1.0, 0.0]))


def test_pre_iwasawa_identity() -> None:
    """The identity factors trivially."""
    factors = pre_iwasawa(np.identity(2))
    assert_close(0.0, factors.P, 1e-15, "P")
    assert_close(1.0, factors.L, 1e-15, "L")
    assert_close(np.identity(2), factors.R.S, 1e-15, "R")


def test_pre_iwasawa_of_J() -> None:
    """J has P = 0, L = 1 and R = J."""
    factors = pre_iwasawa(standard_J(1).J)
    assert_close(0.0, factors.P, 1e-15, "P")
    assert_close(1.0, factors.L, 1e-15, "L")
    assert_close(standard_J(1).J, factors.R.S, 1e-15, "R")


def test_pre_iwasawa_of_scaling() -> None:
    """diag(1/2, 2) is the pure scaling M_2."""
    factors = pre_iwasawa(np.diag([0.5, 2.0]))
    assert_close(0.0, factors.P, 1e-15, "P")
    assert_close(2.0, factors.L, 1e-12, "L")
    assert_close(np.identity(2), factors.R.S, 1e-12, "R")


def test_pre_iwasawa_rejects_non_symplectic() -> None:
    """Non-symplectic input is refused."""
    with pytest.raises(InvalidInputError):
        pre_iwasawa(np.diag([2.0, 1.0]))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(min_value=1, max_value=5), seed=st.integers(0, 2**32))
def test_pre_iwasawa_roundtrip(n: int, seed: int) -> None:
    """V_P M_L R rebuilds random symplectic matrices with structured factors."""
    S = random_symplectic(n, seed)
    factors = pre_iwasawa(S)
    assert_close(S.S, reconstruct(factors), 1e-9, "reconstruction")
    assert_close(factors.P, factors.P.T, 1e-12, "P symmetric")
    assert_close(factors.L, factors.L.T, 1e-12, "L symmetric")
    assert np.all(np.linalg.eigvalsh(factors.L) > 0)
    assert is_symplectic_rotation(factors.R)
    again = pre_iwasawa(S)
    assert_close(factors.P, again.P, 0.0, "P deterministic")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_pre_iwasawa_roundtrip_over_seeds(n: int) -> None:
    """Seeds 0..999 all reconstruct to 1e-9 with structured factors."""
    worst = 0.0
    for seed in range(1000):
        S = random_symplectic(n, seed)
        factors = pre_iwasawa(S)
        worst = max(worst, float(np.max(np.abs(reconstruct(factors) - S.S))))
        assert np.all(np.linalg.eigvalsh(factors.L) > 0), seed
        assert is_symplectic_rotation(factors.R), seed
    assert worst <= 1e-9, worst


def test_random_symplectic_is_deterministic() -> None:
    """The same seed gives bit-identical matrices."""
    first = random_symplectic(1, 42, word_length=8)
    second = random_symplectic(1, 42, word_length=8)
    assert np.array_equal(first.S, second.S)
    assert is_symplectic(first)


def test_symplectic_inverse() -> None:
    """-J S^T J inverts S."""
    S = random_symplectic(3, 7).S
    assert_close(np.identity(6), symplectic_inverse(S) @ S, 1e-9)


def test_rotation_test() -> None:
    """Random unitary blocks give symplectic rotations; shears do not."""
    assert is_symplectic_rotation(random_symplectic_rotation(3, 11))
    assert not is_symplectic_rotation(shear_matrix([[1.0]]))


def test_williamson_examples() -> None:
    """Isotropic, diagonal and symplectically transported covariances."""
    assert_close(0.5, williamson_eigenvalues(0.5 * np.eye(4)).eigenvalues, 1e-12)
    assert_close(1.0, williamson_eigenvalues(np.diag([2.0, 0.5])).minimum, 1e-12)
    S = random_symplectic(2, 5).S
    spectrum = williamson_eigenvalues(S @ (0.7 * np.eye(4)) @ S.T)
    assert_close(0.7, spectrum.eigenvalues, 1e-9)


def test_williamson_rejects_invalid_input() -> None:
    """Non-symmetric and indefinite matrices are invalid."""
    with pytest.raises(InvalidInputError):
        williamson_eigenvalues([[1.0, 0.5], [0.0, 1.0]])
    with pytest.raises(InvalidInputError):
        williamson_eigenvalues(np.diag([1.0, -1.0]))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_symplectic_invariances(seed: int) -> None:
    """sigma and the Williamson spectrum are invariant under Sp(n)."""
    rng = np.random.default_rng(seed)
    S = random_symplectic(2, seed).S
    z, z_prime = rng.normal(size=4), rng.normal(size=4)
    scale = max(1.0, float(np.max(np.abs(S)))) ** 2
    assert abs(
        symplectic_form_value(S @ z, S @ z_prime) - symplectic_form_value(z, z_prime)
    ) <= 1e-10 * scale * (1.0 + np.abs(z).sum() * np.abs(z_prime).sum())
    A = rng.normal(size=(4, 4))
    sigma = A @ A.T + np.eye(4)
    moved = S @ sigma @ S.T
    assert_close(
        williamson_eigenvalues(sigma).eigenvalues,
        williamson_eigenvalues(0.5 * (moved + moved.T)).eigenvalues,
        1e-8 * scale * np.max(sigma),
    )


def test_as_symplectic_wraps() -> None:
    """Validated matrices come back wrapped with their blocks."""
    wrapped = as_symplectic(standard_J(2).J)
    _assert_equals(2, wrapped.n, "n")
    assert_close(np.identity(2), wrapped.B, 0.0, "B")
