"""Unit tests for the exact linear algebra kernel."""

from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from trimodule_lab.core.errors import CorestrictionError, FieldMismatchError, ShapeError
from trimodule_lab.services.exact_kernel import (
    QQ,
    LinearMap,
    Residue,
    cokernel_projection,
    corestrict,
    corestrict_tensor,
    identity_check,
    image_subspace,
    invert,
    kernel_basis,
    left_identity_terms,
    left_inverse,
    map_space,
    permute_legs,
    permute_rows,
    prime_field,
    sample_combinations,
    solve_linear,
    solve_right_inverse,
    span,
    subspace_intersection,
    swap,
    tensor_apply,
    tensor_map,
)

small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def integer_matrices(draw, max_rows: int = 4, max_cols: int = 4):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    return [[draw(small_ints) for _ in range(cols)] for _ in range(rows)]


class TestScalars:
    """Test scalar parsing, formatting and residue arithmetic."""

    def test_rational_round_trip_is_canonical(self):
        """Canonical rational spellings parse and format back unchanged."""
        for text in ["0", "-3", "7/2", "-1/3"]:
            assert QQ.format(QQ.parse(text)) == text

    @pytest.mark.parametrize("text", ["-0", "2/4", "3/1", "+1", "01", "1.5", "1/0"])
    def test_non_canonical_rationals_rejected(self, text):
        """Non-canonical rational strings are refused."""
        with pytest.raises(ValueError):
            QQ.parse(text)

    def test_residues_must_be_reduced(self):
        """Residues are written as reduced representatives only."""
        f5 = prime_field(5)
        assert f5.parse("4") == Residue(4, 5)
        with pytest.raises(ValueError):
            f5.parse("5")
        with pytest.raises(ValueError):
            f5.parse("-1")

    def test_residue_arithmetic(self):
        """Division and negation follow Z/p."""
        a, b = Residue(3, 7), Residue(5, 7)
        assert a / b == Residue(3 * 3, 7)
        assert -a == Residue(4, 7)
        assert a * 0 == 0
        with pytest.raises(ZeroDivisionError):
            a / Residue(0, 7)

    def test_mixed_moduli_rejected(self):
        """Residues of different characteristic never mix."""
        with pytest.raises(FieldMismatchError):
            Residue(1, 3) + Residue(1, 5)

    def test_non_prime_characteristic_rejected(self):
        """Only prime characteristics are accepted."""
        with pytest.raises(ValueError):
            prime_field(4)


class TestLinearMap:
    """Test construction and arithmetic of exact maps."""

    def test_composition_shape_checked(self):
        """Composition requires matching inner dimensions."""
        with pytest.raises(ShapeError):
            LinearMap.identity(2) @ LinearMap.identity(3)

    def test_fields_do_not_mix(self):
        """Maps over different fields cannot be composed."""
        with pytest.raises(FieldMismatchError):
            LinearMap.identity(2) @ LinearMap.identity(2, prime_field(3))

    def test_exact_fractions(self):
        """Entries stay exact rationals."""
        f = LinearMap.from_rows([[Fraction(1, 3), 0], [0, 3]])
        assert (f @ f)[0, 0] == Fraction(1, 9)
        assert invert(f) == LinearMap.from_rows([[3, 0], [0, Fraction(1, 3)]])

    def test_singular_map_has_no_inverse(self):
        """A rank-deficient square map has no inverse."""
        assert invert(LinearMap.from_rows([[1, 2], [2, 4]])) is None

    def test_tensor_is_row_major(self):
        """e_i⊗e_j sits at index i*n + j."""
        a = LinearMap.column_vector([1, 0])
        b = LinearMap.column_vector([0, 0, 1])
        assert tensor_map(a, b) == LinearMap.column_vector([0, 0, 1, 0, 0, 0])

    def test_swap_is_an_involution(self):
        """τ_{N,M}∘τ_{M,N} = id."""
        assert (swap(3, 2) @ swap(2, 3)).is_identity()

    def test_permute_legs_moves_basis_vectors(self):
        """V0⊗V1⊗V2 → V2⊗V0⊗V1 sends e_a⊗e_b⊗e_c to e_c⊗e_a⊗e_b."""
        p = permute_legs((2, 3, 2), (2, 0, 1))
        a, b, c = 1, 2, 0
        source = tensor_map(
            LinearMap.column_vector([int(i == a) for i in range(2)]),
            LinearMap.column_vector([int(i == b) for i in range(3)]),
            LinearMap.column_vector([int(i == c) for i in range(2)]),
        )
        target = tensor_map(
            LinearMap.column_vector([int(i == c) for i in range(2)]),
            LinearMap.column_vector([int(i == a) for i in range(2)]),
            LinearMap.column_vector([int(i == b) for i in range(3)]),
        )
        assert p @ source == target

    def test_permute_legs_rejects_non_permutation(self):
        """The leg order must be a permutation."""
        with pytest.raises(ShapeError):
            permute_legs((2, 2), (0, 0))
        with pytest.raises(ShapeError):
            permute_rows(LinearMap.identity(4), (2, 2), (1, 1))

    def test_permute_rows_matches_permute_legs(self):
        """Reindexing rows agrees with composing the leg permutation."""
        v = LinearMap.from_rows([[i * 3 + j - 5 for j in range(3)] for i in range(12)])
        assert permute_rows(v, (2, 3, 2), (2, 0, 1)) == permute_legs((2, 3, 2), (2, 0, 1)) @ v
        with pytest.raises(ShapeError):
            permute_rows(v, (2, 2), (1, 0))

    @hypothesis_settings(max_examples=40, deadline=None)
    @given(integer_matrices(max_rows=3, max_cols=3), integer_matrices(max_rows=3, max_cols=3), small_ints)
    def test_tensor_apply_matches_kronecker(self, f_rows, g_rows, shift):
        """(f⊗g)∘x agrees with the materialized Kronecker product."""
        f, g = LinearMap.from_rows(f_rows), LinearMap.from_rows(g_rows)
        size = f.cols * g.cols
        x = LinearMap.from_rows([[(i + 2 * j + shift) % 3 - 1 for j in range(2)] for i in range(size)])
        assert tensor_apply(f, g, x) == tensor_map(f, g) @ x

    def test_tensor_apply_shape_checked(self):
        """x must live on the domain of f⊗g."""
        with pytest.raises(ShapeError):
            tensor_apply(LinearMap.identity(2), LinearMap.identity(2), LinearMap.identity(3))

    def test_corestrict_tensor(self):
        """A vector in im f ⊗ im g is recovered in coordinates; others are refused."""
        f = LinearMap.from_rows([[1, 0], [1, 1], [0, 1]])
        g = LinearMap.column_vector([1, 2])
        h = LinearMap.column_vector([3, -1])
        target = tensor_map(f, g) @ h
        assert corestrict_tensor(f, g, target) == h
        assert (left_inverse(f) @ f).is_identity()
        with pytest.raises(CorestrictionError):
            corestrict_tensor(f, g, LinearMap.column_vector([1, 0, 0, 0, 0, 0]))


class TestElimination:
    """Test ranks, kernels and solvers against a symbolic oracle."""

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(integer_matrices())
    def test_rank_matches_sympy(self, rows):
        """Exact rank agrees with sympy's rational rank."""
        assert LinearMap.from_rows(rows).rank() == sympy.Matrix(rows).rank()

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(integer_matrices())
    def test_kernel_is_exact(self, rows):
        """The kernel basis is annihilated and has nullity dimension."""
        f = LinearMap.from_rows(rows)
        kernel = kernel_basis(f)
        assert kernel.dim == f.cols - f.rank()
        assert (f @ kernel.inclusion).is_zero()

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(integer_matrices())
    def test_cokernel_kills_image(self, rows):
        """The cokernel projection vanishes on the image and is surjective."""
        f = LinearMap.from_rows(rows)
        q, projection = cokernel_projection(f)
        assert q == f.rows - f.rank()
        assert (projection @ f).is_zero()
        assert projection.rank() == q

    @hypothesis_settings(max_examples=40, deadline=None)
    @given(integer_matrices(max_rows=3, max_cols=3))
    def test_solver_certificates(self, rows):
        """A X = A·1 is always solvable; a certificate is returned otherwise."""
        a = LinearMap.from_rows(rows)
        b = a @ LinearMap.column_vector([1] * a.cols)
        solution = solve_linear(a, b)
        assert solution.solvable
        assert a @ solution.solution == b
        assert solution.rank == solution.augmented_rank

    def test_inconsistent_system(self):
        """rank < augmented rank certifies there is no solution."""
        a = LinearMap.from_rows([[1, 1], [2, 2]])
        b = LinearMap.column_vector([1, 3])
        solution = solve_linear(a, b)
        assert not solution.solvable
        assert (solution.rank, solution.augmented_rank) == (1, 2)

    def test_right_inverse(self):
        """A surjection has a section and a non-surjection has none."""
        f = LinearMap.from_rows([[1, 0, 1], [0, 1, 1]])
        g = solve_right_inverse(f)
        assert (f @ g).is_identity()
        assert solve_right_inverse(LinearMap.from_rows([[1, 1], [2, 2]])) is None

    def test_rank_over_prime_field(self):
        """[[1, 2], [2, 1]] is singular over Z/3 only."""
        rows = [[1, 2], [2, 1]]
        assert LinearMap.from_rows(rows).rank() == 2
        assert LinearMap.from_rows(rows, prime_field(3)).rank() == 1


class TestSubspaces:
    """Test subspace operations."""

    def test_intersection(self):
        """span{e0, e1} ∩ span{e1, e2} = span{e1}."""
        e = [LinearMap.column_vector([int(i == j) for i in range(3)]) for j in range(3)]
        u = span([e[0], e[1]], 3)
        w = span([e[1], e[2]], 3)
        meet = subspace_intersection(u, w)
        assert meet.dim == 1
        assert meet.contains(e[1])
        assert not meet.contains(e[0])

    def test_image_is_canonical(self):
        """Two maps with the same column space give the same image basis."""
        f = LinearMap.from_rows([[1, 2], [1, 2], [0, 0]])
        g = LinearMap.from_rows([[3], [3], [0]])
        assert image_subspace(f).inclusion == image_subspace(g).inclusion

    def test_corestriction_fails_outside(self):
        """Corestricting a map that leaves the subspace raises."""
        inclusion = LinearMap.column_vector([1, 0])
        with pytest.raises(CorestrictionError):
            corestrict(inclusion, LinearMap.column_vector([0, 1]), "test")
        assert corestrict(inclusion, LinearMap.column_vector([5, 0])) == LinearMap.from_rows([[5]])


class TestMapEquations:
    """Test systems whose unknown is a matrix."""

    def test_commutant_of_diagonal(self):
        """X with DX = XD for D = diag(1, 2) are the diagonal matrices."""
        d = LinearMap.from_rows([[1, 0], [0, 2]])
        i2 = LinearMap.identity(2)
        terms = [*left_identity_terms(d, i2, 1, 2, 2), *left_identity_terms(i2, d, 1, 2, 2, -1)]
        basis = map_space(2, 2, [terms])
        assert len(basis) == 2
        assert all(x[0, 1] == 0 and x[1, 0] == 0 for x in basis)

    def test_sampled_combinations_are_deterministic(self):
        """A seeded generator gives the same samples."""
        basis = [LinearMap.identity(2), LinearMap.from_rows([[0, 1], [1, 0]])]
        first = sample_combinations(basis, 3, np.random.default_rng(7))
        second = sample_combinations(basis, 3, np.random.default_rng(7))
        assert first == second


class TestIdentityCheck:
    """Test the witness produced by identity checks."""

    def test_first_differing_entry(self):
        """The witness names the first differing entry."""
        result = identity_check("demo", LinearMap.identity(2), LinearMap.from_rows([[1, 0], [1, 1]]))
        assert not result.passed
        assert result.witness == "entry (1, 0): 0 != 1"

    def test_shape_mismatch(self):
        """Maps of different shape never agree."""
        result = identity_check("demo", LinearMap.identity(2), LinearMap.identity(3))
        assert not result.passed
        assert "shape" in result.witness
