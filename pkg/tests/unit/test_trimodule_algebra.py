"""Unit tests for trimodule algebras, their modules, cohoms and contramodules."""

from dataclasses import replace
from itertools import product
from typing import Dict, List

import pytest

from trimodule_lab.core.errors import PreconditionError, ProvenanceError
from trimodule_lab.services.bialgebra import FiniteMonoid, monoid_bialgebra
from trimodule_lab.services.comodule import (
    comodule_hom_space,
    cotensor,
    regular_left_comodule,
    simple_graded_comodule,
    trivial_comodule,
)
from trimodule_lab.services.exact_kernel import LinearMap, identity
from trimodule_lab.services.fixtures import comodule_pool, fixture_bialgebra, two_element_monoid
from trimodule_lab.services.trimodule_algebra import (
    act_on_free,
    b_dot_b,
    certify_cohom,
    cohom,
    contra_vs_modules_count,
    contramodule_validate,
    free_contramodule,
    free_module,
    free_module_hom_space,
    is_module_morphism,
    is_semisimple_trimodule_algebra,
    j_functor_report,
    module_from_act,
    module_hom_space,
    monad_unit,
    reconstruct_pointed,
    unit_algebra,
    validate_module,
    validate_trimodule_algebra,
)

SMALL = ["k", "k[Z/2]", "k[S]"]

MONOIDS = [
    FiniteMonoid.cyclic(1),
    FiniteMonoid.cyclic(2),
    FiniteMonoid.cyclic(3),
    FiniteMonoid.cyclic(4),
    two_element_monoid(),
    FiniteMonoid.from_names(("e", "a", "z"), (("e", "a", "z"), ("a", "a", "z"), ("z", "z", "z")), "chain3"),
    FiniteMonoid.from_names(
        ("e", "a", "b", "c"),
        (("e", "a", "b", "c"), ("a", "e", "c", "b"), ("b", "c", "e", "a"), ("c", "b", "a", "e")),
        "Z/2xZ/2",
    ),
    FiniteMonoid.from_names(
        ("e", "s", "t", "u"),
        (("e", "s", "t", "u"), ("s", "s", "u", "u"), ("t", "u", "t", "u"), ("u", "u", "u", "u")),
        "SxS",
    ),
]


def multiplicative_characters(monoid: FiniteMonoid) -> List[Dict[str, int]]:
    """All {0, 1}-valued eps with eps(1) = 1 and eps(uw) = eps(u)·eps(w)."""
    names = monoid.elements
    found = []
    for values in product((0, 1), repeat=monoid.order):
        eps = dict(zip(names, values))
        if eps[names[monoid.identity_index]] != 1:
            continue
        if all(
            eps[names[monoid.multiply(u, w)]] == values[u] * values[w]
            for u in range(monoid.order)
            for w in range(monoid.order)
        ):
            found.append(eps)
    return found


class TestAlgebras:
    """Test the algebra axioms for the built-in algebras."""

    @pytest.mark.parametrize("name", SMALL + ["H4"])
    def test_unit_algebra(self, name):
        """B is an algebra under ε□id."""
        report = validate_trimodule_algebra(unit_algebra(fixture_bialgebra(name)))
        assert report.passed, report.render_text()

    @pytest.mark.parametrize("name", SMALL)
    def test_b_dot_b(self, name):
        """B•B satisfies every axiom and B•B□N has dimension dim B · dim N."""
        b = fixture_bialgebra(name)
        a = b_dot_b(b)
        assert a.dim == b.dim ** 2
        report = validate_trimodule_algebra(a)
        assert report.passed, report.render_text()
        for n in comodule_pool(b):
            assert cotensor(a.carrier, n).dim == b.dim * n.dim

    @pytest.mark.slow
    def test_b_dot_b_over_h4(self, h4):
        """B•B over Sweedler's algebra."""
        assert validate_trimodule_algebra(b_dot_b(h4)).passed

    def test_perturbed_unit_fails(self, z2):
        """Changing one entry of η is caught."""
        a = b_dot_b(z2)
        entries = a.unit.to_lists()
        entries[0][0] = 2
        report = validate_trimodule_algebra(replace(a, unit=LinearMap.from_rows(entries)))
        assert not report.passed
        assert all(check.witness for check in report.failures)


class TestPointedReconstruction:
    """Test the algebra reconstructed from a character of a monoid."""

    def test_example_shape(self, pointed_algebra):
        """eps(s) = 0 leaves a single basis vector in bidegree (e, e)."""
        assert pointed_algebra.dim == 1
        assert pointed_algebra.carrier.left_coaction == LinearMap.from_rows([[1], [0]])
        assert pointed_algebra.carrier.right_coaction == LinearMap.from_rows([[1], [0]])
        assert pointed_algebra.carrier.action.select_columns([1]).is_zero()
        assert pointed_algebra.mul == identity(1)
        assert pointed_algebra.unit == LinearMap.from_rows([[1, 0]])
        assert validate_trimodule_algebra(pointed_algebra).passed

    @pytest.mark.parametrize("monoid", MONOIDS, ids=lambda m: m.name)
    def test_trivial_character_is_b_dot_b(self, monoid):
        """With eps ≡ 1 the pair (w, z) is the grouplike g_w⊗g_z of B•B."""
        a = reconstruct_pointed(monoid, {name: 1 for name in monoid.elements})
        expected = b_dot_b(monoid_bialgebra(monoid))
        assert a.dim == expected.dim == monoid.order ** 2
        assert a.carrier.left_coaction == expected.carrier.left_coaction
        assert a.carrier.right_coaction == expected.carrier.right_coaction
        assert a.carrier.action == expected.carrier.action
        assert a.square.inclusion == expected.square.inclusion
        assert a.mul == expected.mul
        assert a.unit == expected.unit

    @pytest.mark.parametrize("monoid", MONOIDS, ids=lambda m: m.name)
    def test_every_multiplicative_character(self, monoid):
        """Each {0, 1}-valued character gives an algebra on the pairs of its support."""
        characters = multiplicative_characters(monoid)
        assert {name: 1 for name in monoid.elements} in characters
        for eps in characters:
            a = reconstruct_pointed(monoid, eps)
            assert a.dim == sum(eps.values()) ** 2
            report = validate_trimodule_algebra(a)
            assert report.passed, report.render_text()

    @pytest.mark.parametrize(
        "eps",
        [{"e": 1}, {"e": 0, "s": 0}, {"e": 1, "s": 2}],
    )
    def test_invalid_characters(self, eps):
        """eps must be a {0, 1}-valued character on every element."""
        with pytest.raises(PreconditionError):
            reconstruct_pointed(two_element_monoid(), eps)

    def test_non_multiplicative_character(self):
        """On Z/2, eps(g) = 0 is not multiplicative since g² = e."""
        with pytest.raises(PreconditionError, match="multiplicative"):
            reconstruct_pointed(FiniteMonoid.cyclic(2), {"e": 1, "g": 0})


class TestModules:
    """Test modules over trimodule algebras."""

    @pytest.mark.parametrize("name", SMALL)
    def test_free_modules(self, name):
        """A□M is a module for every pool comodule M."""
        b = fixture_bialgebra(name)
        a = b_dot_b(b)
        for m in comodule_pool(b):
            report = validate_module(free_module(a, m))
            assert report.passed, report.render_text()

    def test_action_on_free_needs_provenance(self, z2):
        """V ▷ (A□M) is defined only for modules that remember M."""
        a = unit_algebra(z2)
        free = free_module(a, trivial_comodule(z2))
        assert act_on_free(simple_graded_comodule(z2, "g"), free).dim == 1
        anonymous = module_from_act(a, free.comodule, free.act)
        with pytest.raises(ProvenanceError):
            act_on_free(trivial_comodule(z2), anonymous)

    def test_monad_unit_is_a_module_generator(self, z2):
        """η_M lands in A□M and the identity is a module endomorphism."""
        a = b_dot_b(z2)
        m = regular_left_comodule(z2)
        free = free_module(a, m)
        assert monad_unit(a, m).shape == (free.dim, m.dim)
        assert is_module_morphism(identity(free.dim), free, free)

    def test_free_module_homs(self, z2):
        """Hom((B•B)□M, (B•B)□P) has dimension dim M · dim P."""
        a = b_dot_b(z2)
        m, p = trivial_comodule(z2), regular_left_comodule(z2)
        assert len(module_hom_space(free_module(a, m), free_module(a, p))) == 2

    def test_j_equivalence(self, z2, rng):
        """J is a bijection on hom spaces and respects composition."""
        pool = comodule_pool(z2)
        report = j_functor_report(z2, pool[0], pool[-1], pool[1], 3, rng)
        assert report.passed, report.render_text()

    def test_j_of_identity_between_distinct_comodules(self, z2, rng):
        """J(id) = id is checked on End(M) even when M and P differ."""
        m, p = trivial_comodule(z2), regular_left_comodule(z2)
        report = j_functor_report(z2, m, p, m, 1, rng)
        assert report.check("identity").passed
        assert report.passed, report.render_text()

    @pytest.mark.parametrize("name", SMALL)
    def test_free_module_hom_space(self, name):
        """Maps induced from Hom(M, A□P) agree in number with the solved hom space."""
        b = fixture_bialgebra(name)
        a = b_dot_b(b)
        pool = comodule_pool(b)
        x, y = free_module(a, pool[0]), free_module(a, pool[-1])
        basis = free_module_hom_space(x, y)
        assert len(basis) == len(module_hom_space(x, y))
        assert all(is_module_morphism(f, x, y) for f in basis)

    def test_free_module_hom_space_needs_provenance(self, z2):
        """The induced basis is only defined on free modules."""
        a = unit_algebra(z2)
        free = free_module(a, trivial_comodule(z2))
        with pytest.raises(ProvenanceError):
            free_module_hom_space(module_from_act(a, free.comodule, free.act), free)


class TestCohom:
    """Test cohom(A, −) and contramodules."""

    def test_cohom_of_unit_algebra(self, z2):
        """cohom(B, M) ≅ M."""
        a = unit_algebra(z2)
        for m in comodule_pool(z2):
            assert cohom(a, m).comodule.dim == m.dim

    def test_cohom_adjunction(self, z2, rng):
        """Hom(cohom(A, M), V) ≅ Hom(M, A□V) over k[Z/2]."""
        a = b_dot_b(z2)
        pool = comodule_pool(z2)
        for m in pool:
            report = certify_cohom(cohom(a, m), pool, 2, rng)
            assert report.passed, report.render_text()

    def test_cohom_coaction(self, z2):
        """The descended coaction makes cohom(A, M) a comodule."""
        a = b_dot_b(z2)
        c = cohom(a, trivial_comodule(z2), comodule_pool(z2))
        assert comodule_hom_space(c.comodule, c.comodule)

    def test_free_contramodule(self, z2):
        """cohom(A, M) with the comonad comultiplication is a contramodule."""
        a = b_dot_b(z2)
        report = contramodule_validate(free_contramodule(a, trivial_comodule(z2)))
        assert report.passed, report.render_text()


class TestSemisimplicity:
    """Test the generator criterion and simple counts."""

    def test_b_dot_b_is_semisimple(self, z2):
        """B•B-modules are vector spaces; one simple on each side."""
        a = b_dot_b(z2)
        pool = comodule_pool(z2)
        assert is_semisimple_trimodule_algebra(a, pool)
        assert contra_vs_modules_count(a, pool) == {"module-simples": 1, "contramodule-simples": 1}

    def test_h4_unit_algebra_is_not_semisimple(self, h4):
        """H4-comodules do not form a semisimple category."""
        assert not is_semisimple_trimodule_algebra(unit_algebra(h4), comodule_pool(h4))

    def test_pointed_example_is_semisimple(self, pointed_algebra):
        """The pointed reconstruction has a semisimple module category."""
        assert is_semisimple_trimodule_algebra(pointed_algebra, comodule_pool(pointed_algebra.base))
