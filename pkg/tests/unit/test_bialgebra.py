"""Unit tests for bialgebras, antipodes and the fixture builders."""

import pytest

from trimodule_lab.core.errors import NotAMonoidError, ShapeError, UnsupportedFieldError
from trimodule_lab.services.bialgebra import (
    FiniteMonoid,
    algebra_center,
    antipode_system,
    bialgebra_from_maps,
    convolution,
    find_antipode,
    find_twisted_antipode,
    grouplike_elements,
    group_bialgebra,
    is_grouplike,
    is_semisimple_algebra,
    monoid_bialgebra,
    op_cop,
    regular_algebra_trace_form,
    sweedler_h4,
    trivial_bialgebra,
    validate_bialgebra,
)
from trimodule_lab.services.exact_kernel import LinearMap, identity, prime_field
from trimodule_lab.services.fixtures import FIXTURE_NAMES, fixture_bialgebra, two_element_monoid


class TestFiniteMonoid:
    """Test monoid validation."""

    def test_cyclic_group(self):
        """Z/3 has identity e and g·g^2 = e."""
        z3 = FiniteMonoid.cyclic(3)
        assert z3.elements == ("e", "g", "g^2")
        assert z3.identity_index == 0
        assert z3.multiply(1, 2) == 0

    def test_non_associative_table_rejected(self):
        """A non-associative table is not a monoid."""
        with pytest.raises(NotAMonoidError):
            FiniteMonoid.from_names(
                ("e", "a", "b"),
                (("e", "a", "b"), ("a", "b", "b"), ("b", "a", "a")),
            )

    def test_missing_identity_rejected(self):
        """A semigroup without identity is not a monoid."""
        with pytest.raises(NotAMonoidError):
            FiniteMonoid.from_names(("a", "b"), (("a", "a"), ("a", "a")))

    def test_unknown_element_rejected(self):
        """Table entries must name elements."""
        with pytest.raises(NotAMonoidError):
            FiniteMonoid.from_names(("e",), (("x",),))


class TestFixtures:
    """Test the fixture bialgebras satisfy every axiom."""

    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_fixture_is_a_bialgebra(self, name):
        """Every fixture passes the bialgebra validator."""
        report = validate_bialgebra(fixture_bialgebra(name))
        assert report.passed, report.render_text()

    def test_unknown_fixture(self):
        """Unknown fixture names raise a KeyError listing the choices."""
        with pytest.raises(KeyError, match="H4"):
            fixture_bialgebra("k[Z/7]")

    def test_h4_needs_odd_characteristic(self):
        """Sweedler's algebra is refused in characteristic 2."""
        with pytest.raises(UnsupportedFieldError):
            sweedler_h4(prime_field(2))
        assert validate_bialgebra(sweedler_h4(prime_field(3))).passed

    def test_monoid_elements_are_grouplike(self):
        """Every basis vector of k[S] is grouplike."""
        b = monoid_bialgebra(two_element_monoid())
        elements = grouplike_elements(b)
        assert [name for name, _ in elements] == ["e", "s"]
        assert all(is_grouplike(b, v) for _, v in elements)

    def test_grouplikes_need_a_monoid(self):
        """H4 is not presented as a monoid bialgebra."""
        with pytest.raises(NotAMonoidError):
            grouplike_elements(sweedler_h4())

    def test_shape_mismatch(self):
        """Structure maps of the wrong shape are rejected."""
        b = group_bialgebra(2)
        with pytest.raises(ShapeError):
            bialgebra_from_maps(b.mul, b.unit, b.comul, LinearMap.from_rows([[1, 1, 1]]))

    def test_fingerprint_separates_bases(self):
        """Different structure constants give different fingerprints."""
        assert group_bialgebra(2).fingerprint != monoid_bialgebra(two_element_monoid()).fingerprint
        assert group_bialgebra(2).fingerprint == group_bialgebra(2).fingerprint

    def test_perturbed_multiplication_fails(self):
        """Changing one structure constant is caught with a witness."""
        b = group_bialgebra(2)
        entries = b.mul.to_lists()
        entries[0][3] = 0
        broken = bialgebra_from_maps(LinearMap.from_rows(entries), b.unit, b.comul, b.counit, "broken")
        report = validate_bialgebra(broken)
        assert not report.passed
        assert all(check.witness for check in report.failures)


class TestAntipodes:
    """Test the antipode and twisted antipode solvers."""

    def test_group_antipode_is_inversion(self):
        """On k[Z/2] the antipode is g ↦ g⁻¹ = g."""
        assert find_antipode(group_bialgebra(2)) == identity(2)

    def test_h4_antipode(self):
        """S(x) = -gx and S(gx) = x on Sweedler's algebra."""
        expected = LinearMap.from_rows([
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
            [0, 0, -1, 0],
        ])
        b = sweedler_h4()
        s = find_antipode(b)
        assert s == expected
        assert convolution(s, identity(4), b.coalgebra, b.algebra) == b.unit_counit
        assert s @ s != identity(4)

    def test_twisted_antipode_inverts_antipode(self):
        """On a Hopf algebra with bijective antipode, S' = S⁻¹."""
        b = sweedler_h4()
        assert find_twisted_antipode(b) @ find_antipode(b) == identity(4)

    def test_idempotent_monoid_has_no_antipode(self):
        """k[S] with s² = s has neither antipode; ranks certify it."""
        b = monoid_bialgebra(two_element_monoid())
        for twisted in (False, True):
            system = antipode_system(b, twisted=twisted)
            assert not system.solvable
            assert system.rank < system.augmented_rank

    def test_trivial_bialgebra(self):
        """k is its own Hopf algebra."""
        assert find_antipode(trivial_bialgebra()) == identity(1)

    def test_op_cop_names(self):
        """The co-opposite keeps the algebra and renames the structure."""
        b = sweedler_h4()
        cop = op_cop(b, False, True)
        assert cop.name == "H4^cop"
        assert cop.mul == b.mul
        assert validate_bialgebra(cop).passed
        assert op_cop(b, False, False) is b


class TestSemisimplicity:
    """Test the trace-form criterion and the center."""

    def test_group_algebra_is_semisimple(self):
        """k[Z/2] is semisimple in characteristic 0."""
        assert is_semisimple_algebra(group_bialgebra(2).algebra)

    def test_h4_is_not_semisimple(self):
        """H4 has the nilpotent ideal spanned by x and gx."""
        assert not is_semisimple_algebra(sweedler_h4().algebra)

    def test_trace_form_needs_characteristic_zero(self):
        """The trace form is refused over a prime field."""
        with pytest.raises(UnsupportedFieldError):
            is_semisimple_algebra(group_bialgebra(2, prime_field(3)).algebra)

    def test_center_of_commutative_algebra(self):
        """A commutative algebra is its own center."""
        assert algebra_center(group_bialgebra(3).algebra).dim == 3

    def test_trace_form_of_group_algebra(self, z2):
        """tr(L_{xy}) on k[Z/2] is twice the identity."""
        assert regular_algebra_trace_form(z2.algebra) == LinearMap.from_rows([[2, 0], [0, 2]])
