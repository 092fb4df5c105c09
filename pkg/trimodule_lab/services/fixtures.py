"""
Fixture bialgebras, comodule pools and algebras shared by the acceptance suite,
the CLI and the tests.
"""

from functools import lru_cache
from typing import Dict, List

from .bialgebra import (
    BialgebraFD,
    FiniteMonoid,
    group_bialgebra,
    monoid_bialgebra,
    sweedler_h4,
    trivial_bialgebra,
)
from .comodule import (
    LeftComoduleFD,
    regular_left_comodule,
    simple_graded_comodule,
    sweedler_two_dim_comodule,
    trivial_comodule,
)
from .trimodule import HopfTrimoduleFD, regular_trimodule, trimodule_from_comodule
from .trimodule_algebra import TrimoduleAlgebraFD, b_dot_b, reconstruct_pointed

FIXTURE_NAMES = ("k", "k[Z/2]", "k[S]", "H4")


def two_element_monoid() -> FiniteMonoid:
    """S = {e, s} with s² = s."""
    return FiniteMonoid.from_names(("e", "s"), (("e", "s"), ("s", "s")), "S")


@lru_cache()
def fixture_bialgebras() -> Dict[str, BialgebraFD]:
    bases = [trivial_bialgebra(), group_bialgebra(2), monoid_bialgebra(two_element_monoid()), sweedler_h4()]
    return {b.name: b for b in bases}


def fixture_bialgebra(name: str) -> BialgebraFD:
    try:
        return fixture_bialgebras()[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; expected one of {', '.join(FIXTURE_NAMES)}") from None


def comodule_pool(b: BialgebraFD) -> List[LeftComoduleFD]:
    """k_triv, the regular comodule, graded simples other than k_triv, and span{1,x} for H4."""
    pool = [trivial_comodule(b)]
    if b.dim > 1:
        pool.append(regular_left_comodule(b))
    if b.monoid is not None:
        unit = b.monoid.identity_index
        pool.extend(
            simple_graded_comodule(b, z) for z in range(b.monoid.order) if z != unit
        )
    if b.name == "H4":
        pool.append(sweedler_two_dim_comodule(b))
    return pool


def small_pool(b: BialgebraFD) -> List[LeftComoduleFD]:
    """The one-dimensional members of the pool."""
    return [m for m in comodule_pool(b) if m.dim == 1]


def trimodule_pool(b: BialgebraFD) -> List[HopfTrimoduleFD]:
    """The regular trimodule, the carrier of B•B and B⊗M for every pool comodule M."""
    pool = [regular_trimodule(b), b_dot_b(b).carrier]
    pool.extend(trimodule_from_comodule(m) for m in comodule_pool(b))
    return pool


def pointed_example_algebra() -> TrimoduleAlgebraFD:
    """The pointed reconstruction over k[S] for eps(e) = 1, eps(s) = 0."""
    return reconstruct_pointed(two_element_monoid(), {"e": 1, "s": 0})
