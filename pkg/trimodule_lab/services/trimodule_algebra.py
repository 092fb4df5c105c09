"""
Algebra objects in the category of Hopf trimodules under cotensor product.

Implements:
- ``TrimoduleAlgebraFD`` validation, the unit algebra B and the algebra B•B
- Modules over a trimodule algebra, free modules and the V ▷ (A□M) action
- The J equivalence between free B•B-modules and plain linear maps
- cohom(A, −), the comonad it carries, and contramodules over it
- The pointed reconstruction of rank-one module categories over monoid bialgebras
- Semisimplicity through the endomorphism algebra of a free generator
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import (
    CertificationError,
    CorestrictionError,
    DescentError,
    PreconditionError,
    ProvenanceError,
    ShapeError,
    UnsupportedFieldError,
)
from ..core.logging import get_logger
from ..models.schemas import Report
from .bialgebra import (
    AlgebraFD,
    BialgebraFD,
    FiniteMonoid,
    algebra_center,
    is_semisimple_algebra,
    monoid_bialgebra,
)
from .comodule import (
    CotensorSpace,
    LeftComoduleFD,
    comodule_hom_space,
    cotensor,
    induced_map,
    quotient_comodule,
    regular_bicomodule,
    regular_left_comodule,
    require_same_base,
    tensor_comodules,
    triple_cotensor,
)
from .exact_kernel import (
    QQ,
    LinearMap,
    ScalarField,
    cokernel_projection,
    corestrict,
    corestrict_tensor,
    hstack,
    identity,
    identity_check,
    kernel_basis,
    sample_combinations,
    solve_right_inverse,
    swap,
    tensor_apply,
    tensor_map,
)
from .trimodule import (
    HopfTrimoduleFD,
    morphism_checks,
    regular_trimodule,
    trimodule_cotensor,
    trimodule_from_maps,
)

logger = get_logger(__name__)


# ========================
# Algebras
# ========================

@dataclass(frozen=True)
class TrimoduleAlgebraFD:
    """A trimodule A with μ: A□A → A and η: B → A."""

    carrier: HopfTrimoduleFD
    square: CotensorSpace
    mul: LinearMap
    unit: LinearMap
    name: str = "A"

    def __post_init__(self) -> None:
        if self.mul.shape != (self.dim, self.square.dim):
            raise ShapeError(f"mul of {self.name} has shape {self.mul.shape}, expected ({self.dim}, {self.square.dim})")
        if self.unit.shape != (self.dim, self.base.dim):
            raise ShapeError(f"unit of {self.name} has shape {self.unit.shape}, expected ({self.dim}, {self.base.dim})")

    @property
    def base(self) -> BialgebraFD:
        return self.carrier.base

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def field(self) -> ScalarField:
        return self.carrier.field


def algebra_from_carrier(
    carrier: HopfTrimoduleFD, ambient_mul: LinearMap, unit: LinearMap, name: str
) -> TrimoduleAlgebraFD:
    """Restrict a multiplication given on A⊗A to the cotensor square."""
    square = cotensor(carrier, carrier)
    return TrimoduleAlgebraFD(carrier, square, ambient_mul @ square.inclusion, unit, name)


def _associativity_sides(a: TrimoduleAlgebraFD) -> Tuple[LinearMap, LinearMap]:
    """μ∘(μ□A) and μ∘(A□μ) on A□A□A, coordinatized as (A□A)□A.

    The right bracket reads the same vectors in A⊗(A□A) coordinates.
    """
    k, d = a.field, a.dim
    i_d = identity(d, k)
    square = a.square.inclusion
    outer = cotensor(a.square, a.carrier).inclusion

    left = corestrict(square, tensor_apply(a.mul, i_d, outer), "A□A after μ□A")
    flat = tensor_apply(square, i_d, outer)
    regrouped = corestrict_tensor(i_d, square, flat, "A⊗(A□A)")
    right = corestrict(square, tensor_apply(i_d, a.mul, regrouped), "A□A after A□μ")
    return a.mul @ left, a.mul @ right


def validate_trimodule_algebra(a: TrimoduleAlgebraFD) -> Report:
    """mul and unit are trimodule maps; associativity; unitality against both unitors."""
    b = a.base
    k, d = a.field, a.dim
    i_d = identity(d, k)
    report = Report(subject=f"trimodule algebra {a.name}")

    try:
        square = trimodule_cotensor(a.carrier, a.carrier)
    except CorestrictionError as exc:
        report.add("mul-trimodule-morphism", False, str(exc))
    else:
        report.checks.append(morphism_checks("mul-trimodule-morphism", a.mul, square, a.carrier))
    report.checks.append(
        morphism_checks("unit-trimodule-morphism", a.unit, regular_trimodule(b), a.carrier)
    )

    try:
        lhs, rhs = _associativity_sides(a)
    except CorestrictionError as exc:
        report.add("assoc", False, str(exc))
    else:
        report.checks.append(identity_check("assoc", lhs, rhs))

    regular = regular_bicomodule(b)
    for name, space, lift, unitor in (
        ("unit-left", cotensor(regular, a.carrier), lambda: tensor_map(a.unit, i_d),
         lambda: tensor_map(b.counit, i_d)),
        ("unit-right", cotensor(a.carrier, regular), lambda: tensor_map(i_d, a.unit),
         lambda: tensor_map(i_d, b.counit)),
    ):
        try:
            into_square = corestrict(a.square.inclusion, lift() @ space.inclusion, "A□A")
        except CorestrictionError as exc:
            report.add(name, False, str(exc))
            continue
        report.checks.append(identity_check(name, a.mul @ into_square, unitor() @ space.inclusion))

    logger.debug("Validated trimodule algebra", name=a.name, passed=report.passed)
    return report


def unit_algebra(b: BialgebraFD) -> TrimoduleAlgebraFD:
    """The monoidal unit B as an algebra: μ = ε□id, η = id."""
    carrier = regular_trimodule(b)
    ambient = tensor_map(b.counit, identity(b.dim, b.field))
    return algebra_from_carrier(carrier, ambient, identity(b.dim, b.field), b.name)


def b_dot_b(b: BialgebraFD) -> TrimoduleAlgebraFD:
    """B•B: carrier B⊗B, coactions on the outer legs, diagonal action, η = Δ.

    The multiplication is (b⊗c)□(x⊗y) ↦ b·ε(c)·ε(x) ⊗ y.
    """
    k, n = b.field, b.dim
    i_n = identity(n, k)
    left = tensor_map(b.comul, i_n)
    right = tensor_map(i_n, b.comul)
    action = (
        tensor_map(b.mul, b.mul)
        @ tensor_map(i_n, swap(n, n, k), i_n)
        @ tensor_map(b.comul, i_n, i_n)
    )
    name = f"{b.name}•{b.name}"
    carrier = trimodule_from_maps(b, left, right, action, name)
    ambient = tensor_map(i_n, b.counit, b.counit, i_n)
    logger.debug("Built B•B", base=b.name, dim=n * n)
    return algebra_from_carrier(carrier, ambient, b.comul, name)


def reconstruct_pointed(monoid: FiniteMonoid, eps: Mapping[str, int], field: Optional[ScalarField] = None) -> TrimoduleAlgebraFD:
    """The algebra reconstructed from δ_z ▷ − = eps(z)·Id over k[S].

    Basis: pairs (w, z) with eps(w) = eps(z) = 1 in lexicographic order;
    (w, z) has left degree w and right degree z, u·(w, z) = eps(u)·(uw, uz),
    (w, z)□(z, z') ↦ (w, z') and η(u) = eps(u)·(u, u).
    """
    k = field or QQ
    _check_character(monoid, eps)
    b = monoid_bialgebra(monoid, k)
    n = monoid.order
    support = [i for i in range(n) if eps[monoid.elements[i]] == 1]
    pairs = [(w, z) for w in support for z in support]
    position = {pair: p for p, pair in enumerate(pairs)}
    d = len(pairs)

    left = LinearMap.from_entries(n * d, d, {(w * d + p, p): 1 for p, (w, z) in enumerate(pairs)}, k)
    right = LinearMap.from_entries(d * n, d, {(p * n + z, p): 1 for p, (w, z) in enumerate(pairs)}, k)
    action = LinearMap.from_entries(
        d,
        n * d,
        {
            (position[(monoid.multiply(u, w), monoid.multiply(u, z))], u * d + p): 1
            for u in support
            for p, (w, z) in enumerate(pairs)
        },
        k,
    )
    ambient_mul = LinearMap.from_entries(
        d,
        d * d,
        {
            (position[(w, z2)], p * d + q): 1
            for p, (w, z) in enumerate(pairs)
            for q, (z1, z2) in enumerate(pairs)
            if z == z1
        },
        k,
    )
    unit = LinearMap.from_entries(d, n, {(position[(u, u)], u): 1 for u in support}, k)
    carrier = trimodule_from_maps(b, left, right, action, f"{b.name}/eps")
    logger.info("Reconstructed pointed algebra", monoid=monoid.name, dim=d)
    return algebra_from_carrier(carrier, ambient_mul, unit, f"{b.name}/eps")


def _check_character(monoid: FiniteMonoid, eps: Mapping[str, int]) -> None:
    if set(eps) != set(monoid.elements):
        raise PreconditionError(f"eps must be given on exactly {list(monoid.elements)}")
    if any(v not in (0, 1) for v in eps.values()):
        raise PreconditionError("eps takes values in {0, 1}")
    names = monoid.elements
    if eps[names[monoid.identity_index]] != 1:
        raise PreconditionError("eps of the identity must be 1")
    for u in range(monoid.order):
        for w in range(monoid.order):
            if eps[names[monoid.multiply(u, w)]] != eps[names[u]] * eps[names[w]]:
                raise PreconditionError(f"eps is not multiplicative at ({names[u]}, {names[w]})")


# ========================
# Modules
# ========================

@dataclass(frozen=True)
class TrimoduleModuleFD:
    """A left comodule M with act: A□M → M."""

    algebra: TrimoduleAlgebraFD
    comodule: LeftComoduleFD
    act: LinearMap
    domain: CotensorSpace
    provenance: Optional[LeftComoduleFD] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.act.shape != (self.comodule.dim, self.domain.dim):
            raise ShapeError(f"act has shape {self.act.shape}, expected ({self.comodule.dim}, {self.domain.dim})")

    @property
    def base(self) -> BialgebraFD:
        return self.comodule.base

    @property
    def dim(self) -> int:
        return self.comodule.dim

    @property
    def name(self) -> str:
        return self.comodule.name

    @property
    def field(self) -> ScalarField:
        return self.comodule.field


def module_from_act(
    a: TrimoduleAlgebraFD,
    comodule: LeftComoduleFD,
    act: LinearMap,
    provenance: Optional[LeftComoduleFD] = None,
) -> TrimoduleModuleFD:
    return TrimoduleModuleFD(a, comodule, act, cotensor(a.carrier, comodule), provenance)


def validate_module(module: TrimoduleModuleFD) -> Report:
    """act is colinear, associative against μ and unital against η."""
    a = module.algebra
    b, k = a.base, a.field
    d_a, d_m = a.dim, module.dim
    i_m = identity(d_m, k)
    report = Report(subject=f"module {module.name}")
    domain = module.domain

    report.checks.append(identity_check(
        "act-colinear",
        module.comodule.coaction @ module.act,
        tensor_map(identity(b.dim, k), module.act) @ domain.left_coaction,
    ))

    try:
        triple = triple_cotensor(a.carrier, a.carrier, module.comodule).inclusion
        outer_left = corestrict(tensor_map(a.square.inclusion, i_m), triple, "(A□A)⊗M")
        left = module.act @ corestrict(
            domain.inclusion, tensor_map(a.mul, i_m) @ outer_left, "A□M after μ□M"
        )
        outer_right = corestrict(tensor_map(identity(d_a, k), domain.inclusion), triple, "A⊗(A□M)")
        right = module.act @ corestrict(
            domain.inclusion, tensor_map(identity(d_a, k), module.act) @ outer_right, "A□M after A□act"
        )
    except CorestrictionError as exc:
        report.add("act-assoc", False, str(exc))
    else:
        report.checks.append(identity_check("act-assoc", left, right))

    unit_space = cotensor(regular_bicomodule(b), module.comodule)
    try:
        lifted = corestrict(domain.inclusion, tensor_map(a.unit, i_m) @ unit_space.inclusion, "A□M")
    except CorestrictionError as exc:
        report.add("act-unit", False, str(exc))
    else:
        report.checks.append(identity_check(
            "act-unit", module.act @ lifted, tensor_map(b.counit, i_m) @ unit_space.inclusion
        ))
    return report


def free_module(a: TrimoduleAlgebraFD, m: LeftComoduleFD) -> TrimoduleModuleFD:
    """A□M with act = μ□M through (A□A)□M = A□(A□M)."""
    require_same_base(a.carrier, m)
    k = a.field
    inner = cotensor(a.carrier, m, f"{a.name}□{m.name}")
    comodule = inner.as_left_comodule()
    outer = cotensor(a.carrier, comodule)
    i_m = identity(m.dim, k)
    embedding = tensor_apply(identity(a.dim, k), inner.inclusion, outer.inclusion)
    in_square = corestrict_tensor(a.square.inclusion, i_m, embedding, "(A□A)⊗M")
    act = corestrict(inner.inclusion, tensor_apply(a.mul, i_m, in_square), inner.name)
    logger.debug("Free module", algebra=a.name, comodule=m.name, dim=comodule.dim)
    return TrimoduleModuleFD(a, comodule, act, outer, m)


def act_on_free(v: LeftComoduleFD, free: TrimoduleModuleFD) -> TrimoduleModuleFD:
    """V ▷ (A□M) := A□(V⊗M)."""
    if free.provenance is None:
        raise ProvenanceError(f"{free.name} does not remember the comodule it is free on")
    return free_module(free.algebra, tensor_comodules(v, free.provenance))


def monad_unit(a: TrimoduleAlgebraFD, m: LeftComoduleFD) -> LinearMap:
    """η_M = (η□M)∘λ_M: M → A□M."""
    space = cotensor(a.carrier, m)
    return corestrict(space.inclusion, tensor_map(a.unit, identity(m.dim, a.field)) @ m.coaction, space.name)


def cotensor_map(a: TrimoduleAlgebraFD, f: LinearMap, m: LeftComoduleFD, p: LeftComoduleFD) -> LinearMap:
    """A□f: A□M → A□P."""
    return induced_map(cotensor(a.carrier, m), cotensor(a.carrier, p), tensor_map(identity(a.dim, a.field), f))


def module_hom_space(x: TrimoduleModuleFD, y: TrimoduleModuleFD) -> List[LinearMap]:
    """Comodule maps φ with φ∘act_X = act_Y∘(A□φ).

    The action equation is solved on a basis of the colinear maps X → Y.
    """
    require_same_base(x.comodule, y.comodule)
    a, k = x.algebra, x.field
    colinear = comodule_hom_space(x.comodule, y.comodule)
    if not colinear:
        return []
    i_a = identity(a.dim, k)
    residuals = []
    for f in colinear:
        lifted = y.domain.lift(tensor_apply(i_a, f, x.domain.inclusion), f"{y.domain.name} under A□f")
        residual = f @ x.act - y.act @ lifted
        residuals.append(LinearMap(residual.entries.reshape(-1, 1).copy(), k))
    solutions = kernel_basis(hstack(residuals, rows=y.dim * x.dim, field=k)).inclusion
    return [
        reduce(lambda s, t: s + t, (f.scale(solutions[i, j]) for i, f in enumerate(colinear)))
        for j in range(solutions.cols)
    ]


def free_module_hom_space(x: TrimoduleModuleFD, y: TrimoduleModuleFD) -> List[LinearMap]:
    """Hom(A□M, Y) for x free on M: act_Y∘(A□f) for f in a basis of comodule maps M → Y."""
    if x.provenance is None:
        raise ProvenanceError(f"{x.name} does not remember the comodule it is free on")
    require_same_base(x.comodule, y.comodule)
    a, k = x.algebra, x.field
    source = cotensor(a.carrier, x.provenance, x.comodule.name)
    return [
        y.act @ induced_map(source, y.domain, tensor_map(identity(a.dim, k), f))
        for f in comodule_hom_space(x.provenance, y.comodule)
    ]


def is_module_morphism(f: LinearMap, x: TrimoduleModuleFD, y: TrimoduleModuleFD) -> bool:
    k, n = x.field, x.base.dim
    if tensor_map(identity(n, k), f) @ x.comodule.coaction != y.comodule.coaction @ f:
        return False
    try:
        lifted = induced_map(x.domain, y.domain, tensor_map(identity(x.algebra.dim, k), f))
    except CorestrictionError:
        return False
    return f @ x.act == y.act @ lifted


def _coordinates(basis: Sequence[LinearMap], field: ScalarField):
    vectors = [LinearMap(f.entries.reshape(-1, 1).copy(), field) for f in basis]
    size = basis[0].rows * basis[0].cols if basis else 0
    matrix = hstack(vectors, rows=size, field=field)

    def coordinates(f: LinearMap) -> LinearMap:
        return corestrict(matrix, LinearMap(f.entries.reshape(-1, 1).copy(), field), "span of the basis")

    return coordinates


def algebra_from_basis(
    basis: Sequence[LinearMap], product, unit: LinearMap, field: ScalarField
) -> AlgebraFD:
    """Structure constants of a finite-dimensional algebra of maps closed under ``product``."""
    k = len(basis)
    coordinates = _coordinates(basis, field)
    columns = [coordinates(product(basis[i], basis[j])) for i in range(k) for j in range(k)]
    mul = hstack(columns, rows=k, field=field) if columns else LinearMap.zero(k, 0, field)
    unit_vector = coordinates(unit) if k else LinearMap.zero(0, 1, field)
    return AlgebraFD(k, mul, unit_vector)


def endomorphism_algebra(module: TrimoduleModuleFD) -> AlgebraFD:
    """End(M)^op: e_i·e_j is φ_j∘φ_i."""
    if module.provenance is not None:
        basis = free_module_hom_space(module, module)
    else:
        basis = module_hom_space(module, module)
    return algebra_from_basis(
        basis, lambda f, g: g @ f, identity(module.dim, module.field), module.field
    )


# ========================
# The J equivalence for B•B
# ========================

@dataclass(frozen=True)
class JFunctor:
    """Morphisms (B•B)□M → (B•B)□P of free modules against linear maps M → P."""

    algebra: TrimoduleAlgebraFD
    source: TrimoduleModuleFD
    target: TrimoduleModuleFD

    @property
    def m(self) -> LeftComoduleFD:
        return self.source.provenance

    @property
    def p(self) -> LeftComoduleFD:
        return self.target.provenance

    @cached_property
    def _m_space(self) -> CotensorSpace:
        return cotensor(self.algebra.carrier, self.m)

    @cached_property
    def _p_space(self) -> CotensorSpace:
        return cotensor(self.algebra.carrier, self.p)

    @cached_property
    def _collapse(self) -> LinearMap:
        b, k = self.algebra.base, self.algebra.field
        return tensor_map(b.counit, b.counit, identity(self.p.dim, k)) @ self._p_space.inclusion

    @cached_property
    def _unit(self) -> LinearMap:
        return monad_unit(self.algebra, self.m)

    def apply(self, sigma: LinearMap) -> LinearMap:
        """J(σ) = (ε⊗ε⊗P)∘σ∘η_M."""
        return self._collapse @ sigma @ self._unit

    def inverse(self, g: LinearMap) -> LinearMap:
        """g ↦ ∇_P ∘ (A□h) with h = (B⊗λ_P)∘(B⊗g)∘λ_M corestricted to A□P."""
        a = self.algebra
        b, k = a.base, a.field
        i_n = identity(b.dim, k)
        ambient = tensor_map(i_n, self.p.coaction) @ tensor_map(i_n, g) @ self.m.coaction
        h = corestrict(self._p_space.inclusion, ambient, self._p_space.name)
        lifted = induced_map(self._m_space, self.target.domain, tensor_map(identity(a.dim, k), h))
        return self.target.act @ lifted


def j_functor(b: BialgebraFD, m: LeftComoduleFD, p: LeftComoduleFD) -> JFunctor:
    a = b_dot_b(b)
    return JFunctor(a, free_module(a, m), free_module(a, p))


def j_functor_report(
    b: BialgebraFD,
    m: LeftComoduleFD,
    p: LeftComoduleFD,
    q: LeftComoduleFD,
    samples: int,
    rng: np.random.Generator,
) -> Report:
    """Round trips of J on both bases, the dimension count, J(id) = id and J(τ∘σ) = J(τ)∘J(σ).

    Each hom space and each functor is built once and shared by all samples.
    """
    k = b.field
    report = Report(subject=f"J over {b.name}: {m.name}, {p.name}")
    j_mp = j_functor(b, m, p)
    j_pq = JFunctor(j_mp.algebra, j_mp.target, free_module(j_mp.algebra, q))
    j_mq = JFunctor(j_mp.algebra, j_mp.source, j_pq.target)
    j_mm = JFunctor(j_mp.algebra, j_mp.source, j_mp.source)

    hom = free_module_hom_space(j_mp.source, j_mp.target)
    report.add(
        f"dim:{m.name},{p.name}",
        len(hom) == m.dim * p.dim,
        None if len(hom) == m.dim * p.dim else f"{len(hom)} != {m.dim}·{p.dim}",
    )
    report.checks.extend(
        identity_check(f"round-trip-modules#{i}", j_mp.inverse(j_mp.apply(s)), s)
        for i, s in enumerate(hom)
    )
    plain = [
        LinearMap.from_entries(p.dim, m.dim, {(r, c): 1}, k)
        for r in range(p.dim)
        for c in range(m.dim)
    ]
    report.checks.extend(
        identity_check(f"round-trip-linear#{i}", j_mp.apply(j_mp.inverse(g)), g)
        for i, g in enumerate(plain)
    )
    report.checks.append(
        identity_check("identity", j_mm.apply(identity(j_mm.source.dim, k)), identity(m.dim, k))
    )
    hom_pq = free_module_hom_space(j_pq.source, j_pq.target)
    sigmas = sample_combinations(hom, samples, rng)
    taus = sample_combinations(hom_pq, samples, rng)
    for i, (sigma, tau) in enumerate(zip(sigmas, taus)):
        report.checks.append(identity_check(
            f"composition#{i}", j_mq.apply(tau @ sigma), j_pq.apply(tau) @ j_mp.apply(sigma)
        ))
    return report


# ========================
# cohom(A, −) and contramodules
# ========================

@dataclass(frozen=True)
class Cohom:
    """cohom(A, M) as a quotient of A*⊗M, with the unit M → A□cohom(A, M)."""

    algebra: TrimoduleAlgebraFD
    source: LeftComoduleFD
    comodule: LeftComoduleFD
    projection: LinearMap
    section: LinearMap
    unit_space: CotensorSpace
    unit: LinearMap

    def transpose(self, f: LinearMap, target: CotensorSpace) -> LinearMap:
        """Hom(M, A□V) → Hom(cohom(A, M), V): uncurry, then descend to the quotient."""
        k = self.algebra.field
        d_a, d_m, d_v = self.algebra.dim, self.source.dim, target.second.dim
        grid = (target.inclusion @ f).entries.reshape(d_a, d_v, d_m).transpose(1, 0, 2)
        uncurried = LinearMap(grid.reshape(d_v, d_a * d_m).copy(), k)
        result = uncurried @ self.section
        if result @ self.projection != uncurried:
            raise DescentError(f"map out of {self.source.name} does not factor through cohom")
        return result

    def curry(self, g: LinearMap, target: CotensorSpace) -> LinearMap:
        """Hom(cohom(A, M), V) → Hom(M, A□V): g ↦ (A□g)∘u."""
        k = self.algebra.field
        ambient = tensor_map(identity(self.algebra.dim, k), g) @ self.unit_space.inclusion @ self.unit
        return corestrict(target.inclusion, ambient, target.name)


def _dual_coaction(a: TrimoduleAlgebraFD) -> LinearMap:
    """The left coaction on A* induced by the right coaction of A."""
    d, n = a.dim, a.base.dim
    grid = a.carrier.right_coaction.entries.reshape(d, n, d).transpose(1, 2, 0)
    return LinearMap(grid.reshape(n * d, d).copy(), a.field)


def cohom(
    a: TrimoduleAlgebraFD,
    m: LeftComoduleFD,
    pool: Optional[Sequence[LeftComoduleFD]] = None,
) -> Cohom:
    """The left adjoint of A□− at M, certified on ``pool`` when one is given."""
    require_same_base(a.carrier, m)
    b, k = a.base, a.field
    n, d_a, d_m = b.dim, a.dim, m.dim
    lam_a, lam_m = a.carrier.left_coaction, m.coaction

    relations: List[Dict[int, object]] = []
    for e in range(n):
        for j in range(d_a):
            for c in range(d_m):
                vector: Dict[int, object] = {}
                for l in range(d_m):
                    value = lam_m[e * d_m + l, c]
                    if value:
                        vector[j * d_m + l] = vector.get(j * d_m + l, 0) + value
                for i in range(d_a):
                    value = lam_a[e * d_a + j, i]
                    if value:
                        vector[i * d_m + c] = vector.get(i * d_m + c, 0) - value
                relations.append(vector)
    span = LinearMap.from_images(d_a * d_m, len(relations), relations, k)
    q, projection = cokernel_projection(span)
    section = solve_right_inverse(projection)
    if section is None:
        raise CertificationError("cohom projection has no section")

    lifted = tensor_map(identity(n, k), projection) @ tensor_map(_dual_coaction(a), identity(d_m, k))
    coaction = lifted @ section
    if coaction @ projection != lifted:
        raise DescentError(f"coaction does not descend to cohom({a.name}, {m.name})")
    quotient = LeftComoduleFD(b, q, coaction, f"cohom({a.name},{m.name})")

    grid = projection.entries.reshape(q, d_a, d_m).transpose(1, 0, 2).reshape(d_a * q, d_m)
    unit_space = cotensor(a.carrier, quotient)
    try:
        unit = corestrict(unit_space.inclusion, LinearMap(grid.copy(), k), unit_space.name)
    except CorestrictionError as exc:
        raise CertificationError(f"unit of cohom({a.name}, {m.name}) leaves A□cohom") from exc

    result = Cohom(a, m, quotient, projection, section, unit_space, unit)
    if pool is not None:
        report = certify_cohom(result, pool, 0, np.random.default_rng(0))
        if not report.passed:
            logger.warning("cohom certification failed", algebra=a.name, comodule=m.name,
                           failures=[c.name for c in report.failures])
            raise CertificationError(f"cohom({a.name}, {m.name}) fails {report.failures[0].name}")
    logger.debug("cohom computed", algebra=a.name, comodule=m.name, dim=q)
    return result


def certify_cohom(
    c: Cohom, pool: Sequence[LeftComoduleFD], samples: int, rng: np.random.Generator
) -> Report:
    """Hom(cohom(A, M), V) ≅ Hom(M, A□V): dimensions, round trips and naturality in V."""
    a = c.algebra
    k = a.field
    report = Report(subject=f"cohom({a.name}, {c.source.name})")
    for index, v in enumerate(pool):
        av = cotensor(a.carrier, v)
        left = comodule_hom_space(c.comodule, v)
        right = comodule_hom_space(c.source, av.as_left_comodule())
        report.add(
            f"dim:{v.name}", len(left) == len(right),
            None if len(left) == len(right) else f"{len(left)} != {len(right)}",
        )
        for i, g in enumerate(left):
            report.checks.append(identity_check(f"round-trip-cohom:{v.name}#{i}", c.transpose(c.curry(g, av), av), g))
        for i, f in enumerate(right):
            report.checks.append(identity_check(f"round-trip-hom:{v.name}#{i}", c.curry(c.transpose(f, av), av), f))

        w = pool[(index + 1) % len(pool)]
        aw = cotensor(a.carrier, w)
        maps = comodule_hom_space(v, w)
        for i, (g, h) in enumerate(zip(sample_combinations(left, samples, rng), sample_combinations(maps, samples, rng))):
            lifted = induced_map(av, aw, tensor_map(identity(a.dim, k), h))
            report.checks.append(identity_check(
                f"natural:{v.name}->{w.name}#{i}", c.curry(h @ g, aw), lifted @ c.curry(g, av)
            ))
    return report


def comonad_counit(c: Cohom) -> LinearMap:
    """cohom(A, M) → M, the mate of η_M."""
    return c.transpose(monad_unit(c.algebra, c.source), cotensor(c.algebra.carrier, c.source))


def cohom_map(source: Cohom, target: Cohom, f: LinearMap) -> LinearMap:
    """cohom(A, f): cohom(A, M) → cohom(A, M') for f: M → M'."""
    return source.transpose(target.unit @ f, target.unit_space)


def comonad_comultiplication(c: Cohom, c2: Cohom) -> LinearMap:
    """cohom(A, M) → cohom(A, cohom(A, M)), the mate of μ; ``c2`` is cohom(A, cohom(A, M))."""
    a = c.algebra
    k = a.field
    twice = free_module(a, c2.comodule)
    lifted = induced_map(c.unit_space, twice.domain, tensor_map(identity(a.dim, k), c2.unit))
    return c.transpose(twice.act @ lifted @ c.unit, c2.unit_space)


@dataclass(frozen=True)
class ContramoduleFD:
    """A comodule C with coact: C → cohom(A, C)."""

    algebra: TrimoduleAlgebraFD
    comodule: LeftComoduleFD
    coact: LinearMap

    @property
    def dim(self) -> int:
        return self.comodule.dim

    @property
    def name(self) -> str:
        return self.comodule.name


def contramodule_validate(c: ContramoduleFD) -> Report:
    """coact is colinear, coassociative against δ and counital against ε."""
    a = c.algebra
    k, n = a.field, a.base.dim
    report = Report(subject=f"contramodule {c.name}")
    level1 = cohom(a, c.comodule)
    if c.coact.shape != (level1.comodule.dim, c.dim):
        raise ShapeError(f"coact has shape {c.coact.shape}, expected ({level1.comodule.dim}, {c.dim})")
    level2 = cohom(a, level1.comodule)

    report.checks.append(identity_check(
        "comodule-morphism",
        level1.comodule.coaction @ c.coact,
        tensor_map(identity(n, k), c.coact) @ c.comodule.coaction,
    ))
    try:
        lifted = cohom_map(level1, level2, c.coact)
    except (DescentError, CorestrictionError) as exc:
        report.add("coassoc", False, str(exc))
    else:
        report.checks.append(identity_check(
            "coassoc", lifted @ c.coact, comonad_comultiplication(level1, level2) @ c.coact
        ))
    report.checks.append(identity_check("counit", comonad_counit(level1) @ c.coact, identity(c.dim, k)))
    return report


def free_contramodule(a: TrimoduleAlgebraFD, m: LeftComoduleFD) -> ContramoduleFD:
    """cohom(A, M) with coaction the comultiplication of the comonad."""
    level1 = cohom(a, m)
    level2 = cohom(a, level1.comodule)
    return ContramoduleFD(a, level1.comodule, comonad_comultiplication(level1, level2))


# ========================
# Semisimplicity
# ========================

def preserves_cokernels(a: TrimoduleAlgebraFD, pool: Sequence[LeftComoduleFD]) -> bool:
    """A□coker(f) = coker(A□f) for the basis maps between pool comodules."""
    for m in pool:
        for p in pool:
            for f in comodule_hom_space(p, m):
                quotient, projection = quotient_comodule(m, f)
                image = cotensor_map(a, f, p, m)
                pushed = cotensor_map(a, projection, m, quotient)
                expected = cotensor(a.carrier, m).dim - image.rank()
                if pushed.rank() != expected or cotensor(a.carrier, quotient).dim != expected:
                    logger.info("Cokernel not preserved", algebra=a.name, source=p.name, target=m.name)
                    return False
    return True


def _generator_module(a: TrimoduleAlgebraFD) -> TrimoduleModuleFD:
    return free_module(a, regular_left_comodule(a.base))


def is_semisimple_trimodule_algebra(
    a: TrimoduleAlgebraFD, pool: Sequence[LeftComoduleFD]
) -> bool:
    """Semisimplicity of End(A□B_reg)^op; A□− must preserve cokernels on ``pool``."""
    if a.field.characteristic != 0:
        raise UnsupportedFieldError("semisimplicity is decided in characteristic 0 only")
    if not preserves_cokernels(a, pool):
        raise PreconditionError(f"{a.name}□− does not preserve cokernels on the pool")
    return is_semisimple_algebra(endomorphism_algebra(_generator_module(a)))


def coendomorphism_algebra(a: TrimoduleAlgebraFD) -> AlgebraFD:
    """Hom(cohom(A, G), G) under co-Kleisli composition ψ ⋆ ψ' = ψ∘cohom(A, ψ')∘δ."""
    generator = regular_left_comodule(a.base)
    level1 = cohom(a, generator)
    level2 = cohom(a, level1.comodule)
    delta = comonad_comultiplication(level1, level2)
    basis = comodule_hom_space(level1.comodule, generator)

    def product(psi: LinearMap, phi: LinearMap) -> LinearMap:
        return psi @ level2.transpose(level1.unit @ phi, level1.unit_space) @ delta

    return algebra_from_basis(basis, product, comonad_counit(level1), a.field)


def contra_vs_modules_count(
    a: TrimoduleAlgebraFD, pool: Sequence[LeftComoduleFD]
) -> Dict[str, int]:
    """Simple counts on both sides, read off as center dimensions of split semisimple algebras."""
    if not is_semisimple_trimodule_algebra(a, pool):
        raise PreconditionError(f"{a.name} is not semisimple")
    modules = algebra_center(endomorphism_algebra(_generator_module(a))).dim
    contramodules = algebra_center(coendomorphism_algebra(a)).dim
    logger.info("Simple counts", algebra=a.name, modules=modules, contramodules=contramodules)
    return {"module-simples": modules, "contramodule-simples": contramodules}
