"""
The module monad A□− of a trimodule algebra and the Hopf-monad side of bialgebras.

Implements:
- ``MonadInstanceFD`` with unit, multiplication and interchange per comodule
- Monad laws and the lax module-monad compatibility squares
- The free/forgetful bijection Hom(T(X), Y) ≅ Hom(X, Y)
- Linton coequalizers V ▶ M with unitor, associator and free comparison maps
- The reconstruction identity for the free module on the trivial comodule
- Fusion operators, Galois maps and the right Hopf criterion for H⊗−
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import (
    CorestrictionError,
    DescentError,
    InvariantViolation,
    ShapeError,
)
from ..core.logging import get_logger
from ..models.schemas import Report
from .bialgebra import BialgebraFD, find_antipode
from .comodule import (
    LeftComoduleFD,
    comodule_hom_space,
    graded_dimensions,
    is_bijective,
    quotient_comodule,
    require_same_base,
    simple_graded_comodule,
    tensor_comodules,
    trivial_comodule,
)
from .exact_kernel import (
    LinearMap,
    identity,
    identity_check,
    invert,
    kernel_basis,
    permute_legs,
    sample_combinations,
    solve_right_inverse,
    swap,
    tensor_map,
)
from .trimodule import interchange
from .trimodule_algebra import (
    TrimoduleAlgebraFD,
    TrimoduleModuleFD,
    act_on_free,
    cotensor_map,
    free_module,
    is_module_morphism,
    module_from_act,
    module_hom_space,
    monad_unit,
    validate_module,
)

logger = get_logger(__name__)


# ========================
# The monad
# ========================

@dataclass(frozen=True)
class MonadInstanceFD:
    """T = A□− materialized on a pool of comodules."""

    algebra: TrimoduleAlgebraFD
    pool: Tuple[LeftComoduleFD, ...] = field(default=(), compare=False)

    @property
    def base(self) -> BialgebraFD:
        return self.algebra.base

    def free(self, m: LeftComoduleFD) -> TrimoduleModuleFD:
        return free_module(self.algebra, m)

    def apply(self, m: LeftComoduleFD) -> LeftComoduleFD:
        """T(M) as a left comodule."""
        return self.free(m).comodule

    def unit(self, m: LeftComoduleFD) -> LinearMap:
        """η_M: M → A□M."""
        return monad_unit(self.algebra, m)

    def multiplication(self, m: LeftComoduleFD) -> LinearMap:
        """μ_M: A□(A□M) → A□M."""
        return self.free(m).act

    def interchange(self, v: LeftComoduleFD, m: LeftComoduleFD) -> LinearMap:
        """χ_{V,M}: V⊗(A□M) → A□(V⊗M)."""
        return interchange(self.algebra.carrier, v, m)


def monad_instance(a: TrimoduleAlgebraFD, pool: Sequence[LeftComoduleFD] = ()) -> MonadInstanceFD:
    if pool:
        require_same_base(a.carrier, *pool)
    return MonadInstanceFD(a, tuple(pool))


def monad_laws(t: MonadInstanceFD) -> Report:
    """μ∘ηT = id = μ∘Tη and μ∘Tμ = μ∘μT at every pool comodule."""
    a = t.algebra
    report = Report(subject=f"monad {a.name}□−")
    for m in t.pool:
        free = t.free(m)
        tm = free.comodule
        ttm = free.domain.as_left_comodule()
        i_tm = identity(tm.dim, a.field)
        report.checks.append(identity_check(f"unit-left:{m.name}", free.act @ t.unit(tm), i_tm))
        report.checks.append(identity_check(
            f"unit-right:{m.name}", free.act @ cotensor_map(a, t.unit(m), m, tm), i_tm
        ))
        report.checks.append(identity_check(
            f"assoc:{m.name}",
            free.act @ cotensor_map(a, free.act, ttm, tm),
            free.act @ t.multiplication(tm),
        ))
    return report


def module_monad_compatibility(t: MonadInstanceFD, samples: int) -> Report:
    """η and μ commute with χ on the first ``samples`` pool pairs (V, M).

    χ_{V,M}∘(V⊗η_M) = η_{V⊗M} and
    χ_{V,M}∘(V⊗μ_M) = μ_{V⊗M}∘T(χ_{V,M})∘χ_{V,T(M)}.
    """
    a, k = t.algebra, t.algebra.field
    report = Report(subject=f"lax module monad {a.name}□−")
    for v, m in list(product(t.pool, repeat=2))[:samples]:
        tag = f"{v.name},{m.name}"
        i_v = identity(v.dim, k)
        vm = tensor_comodules(v, m)
        chi = t.interchange(v, m)
        report.checks.append(identity_check(
            f"unit-square:{tag}", chi @ tensor_map(i_v, t.unit(m)), t.unit(vm)
        ))
        free_m = t.free(m)
        chi_t = t.interchange(v, free_m.comodule)
        source = tensor_comodules(v, free_m.comodule)
        lifted = cotensor_map(a, chi, source, t.apply(vm))
        report.checks.append(identity_check(
            f"mul-square:{tag}",
            chi @ tensor_map(i_v, free_m.act),
            t.multiplication(vm) @ lifted @ chi_t,
        ))
    return report


# ========================
# Free / forgetful
# ========================

@dataclass(frozen=True)
class FreeForgetful:
    """Hom_modules(T(X), Y) ≅ Hom_comodules(X, Y) for one pair."""

    monad: MonadInstanceFD
    x: LeftComoduleFD
    y: TrimoduleModuleFD

    @property
    def free(self) -> TrimoduleModuleFD:
        return self.monad.free(self.x)

    def forward(self, f: LinearMap) -> LinearMap:
        """f ↦ f∘η_X."""
        return f @ self.monad.unit(self.x)

    def backward(self, g: LinearMap) -> LinearMap:
        """g ↦ ∇_Y∘T(g)."""
        return self.y.act @ cotensor_map(self.monad.algebra, g, self.x, self.y.comodule)

    def certify(self, samples: int, rng: np.random.Generator) -> Report:
        """Dimensions, round trips on both bases, and naturality in X."""
        tag = f"{self.x.name},{self.y.name}"
        report = Report(subject=f"free/forgetful {tag}")
        modules = module_hom_space(self.free, self.y)
        comodules = comodule_hom_space(self.x, self.y.comodule)
        report.data[f"dim:{tag}"] = len(modules)
        report.add(
            f"dim:{tag}",
            len(modules) == len(comodules),
            None if len(modules) == len(comodules) else f"{len(modules)} != {len(comodules)}",
        )
        report.checks.extend(
            identity_check(f"round-trip-modules#{i}:{tag}", self.backward(self.forward(f)), f)
            for i, f in enumerate(modules)
        )
        report.checks.extend(
            identity_check(f"round-trip-comodules#{i}:{tag}", self.forward(self.backward(g)), g)
            for i, g in enumerate(comodules)
        )
        a = self.monad.algebra
        endos = sample_combinations(comodule_hom_space(self.x, self.x), samples, rng)
        maps = sample_combinations(modules, samples, rng)
        for i, (h, f) in enumerate(zip(endos, maps)):
            report.checks.append(identity_check(
                f"naturality#{i}:{tag}",
                self.forward(f @ cotensor_map(a, h, self.x, self.x)),
                self.forward(f) @ h,
            ))
        return report


def free_forgetful_iso(t: MonadInstanceFD, x: LeftComoduleFD, y: TrimoduleModuleFD) -> FreeForgetful:
    require_same_base(x, y.comodule, t.algebra.carrier)
    return FreeForgetful(t, x, y)


# ========================
# Linton coequalizers
# ========================

@dataclass(frozen=True)
class LintonCoequalizer:
    """V ▶ M as the cokernel of T(V⊗∇) − μ∘T(χ) on T(V⊗T(M))."""

    v: LeftComoduleFD
    module: TrimoduleModuleFD
    free: TrimoduleModuleFD
    parallel: Tuple[LinearMap, LinearMap]
    projection: LinearMap
    section: LinearMap
    quotient: TrimoduleModuleFD

    @property
    def difference(self) -> LinearMap:
        return self.parallel[0] - self.parallel[1]

    def descend(self, h: LinearMap, name: str = "") -> LinearMap:
        """The map out of V ▶ M induced by h on T(V⊗M)."""
        induced = h @ self.section
        if induced @ self.projection != h:
            raise DescentError(f"{name or 'map'} does not coequalize the pair for {self.quotient.name}")
        return induced


def linton_coequalizer(t: MonadInstanceFD, v: LeftComoduleFD, m: TrimoduleModuleFD) -> LintonCoequalizer:
    a = t.algebra
    require_same_base(a.carrier, v, m.comodule)
    k = a.field
    vm = tensor_comodules(v, m.comodule)
    free = t.free(vm)
    vtm = tensor_comodules(v, m.domain.as_left_comodule())

    first = cotensor_map(a, tensor_map(identity(v.dim, k), m.act), vtm, vm)
    second = free.act @ cotensor_map(a, t.interchange(v, m.comodule), vtm, free.comodule)
    name = f"{v.name}▶{m.name}"
    comodule, projection = quotient_comodule(free.comodule, first - second, name)
    section = solve_right_inverse(projection)
    lifted = cotensor_map(a, projection, free.comodule, comodule)
    lifted_section = solve_right_inverse(lifted)
    if section is None or lifted_section is None:
        raise DescentError(f"A□π is not surjective for {name}")
    act = projection @ free.act @ lifted_section
    if act @ lifted != projection @ free.act:
        raise DescentError(f"the action of {free.name} does not descend to {name}")
    quotient = module_from_act(a, comodule, act)
    logger.debug("Linton coequalizer", v=v.name, m=m.name, ambient=free.dim, dim=comodule.dim)
    return LintonCoequalizer(v, m, free, (first, second), projection, section, quotient)


def linton_action(t: MonadInstanceFD, v: LeftComoduleFD, m: TrimoduleModuleFD) -> TrimoduleModuleFD:
    """V ▶ M with its descended action."""
    return linton_coequalizer(t, v, m).quotient


def linton_oracle(c: LintonCoequalizer) -> Report:
    """Recompute V ▶ M from the annihilator of the difference and compare."""
    a, k = c.free.algebra, c.free.field
    tag = c.quotient.name
    report = Report(subject=f"Linton oracle {tag}")
    functionals = kernel_basis(c.difference.T).inclusion.T
    report.add(
        f"oracle-dim:{tag}",
        functionals.rows == c.quotient.dim,
        None if functionals.rows == c.quotient.dim else f"{functionals.rows} != {c.quotient.dim}",
    )
    if functionals.rows != c.quotient.dim:
        return report
    comparison = functionals @ c.section
    report.checks.append(identity_check(f"oracle-kernel:{tag}", comparison @ c.projection, functionals))
    inverse = invert(comparison)
    if inverse is None:
        report.add(f"oracle-iso:{tag}", False, "comparison map is singular")
        return report
    coaction = tensor_map(identity(a.base.dim, k), comparison) @ c.quotient.comodule.coaction @ inverse
    other = LeftComoduleFD(a.base, functionals.rows, coaction, f"{tag}'")
    report.checks.append(identity_check(
        f"oracle-coaction:{tag}",
        tensor_map(identity(a.base.dim, k), functionals) @ c.free.comodule.coaction,
        coaction @ functionals,
    ))
    lifted = cotensor_map(a, functionals, c.free.comodule, other)
    section = solve_right_inverse(lifted)
    if section is None:
        report.add(f"oracle-action:{tag}", False, "A□π' is not surjective")
        return report
    act = functionals @ c.free.act @ section
    transported = comparison @ c.quotient.act @ cotensor_map(a, inverse, other, c.quotient.comodule)
    report.checks.append(identity_check(f"oracle-action:{tag}", act, transported))
    return report


def linton_unitor(t: MonadInstanceFD, c: LintonCoequalizer) -> LinearMap:
    """l_M: k ▶ M → M, induced by ∇_M on T(k⊗M)."""
    lifted = cotensor_map(t.algebra, identity(c.module.dim, t.algebra.field), c.free.provenance, c.module.comodule)
    return c.descend(c.module.act @ lifted, f"unitor {c.quotient.name}")


def linton_free_iso(t: MonadInstanceFD, c: LintonCoequalizer) -> Tuple[LinearMap, TrimoduleModuleFD]:
    """V ▶ T(X) → T(V⊗X), induced by μ_{V⊗X}∘T(χ_{V,X})."""
    x = c.module.provenance
    if x is None:
        raise ShapeError(f"{c.module.name} is not a free module")
    target = t.free(tensor_comodules(c.v, x))
    chi = t.interchange(c.v, x)
    h = target.act @ cotensor_map(t.algebra, chi, c.free.provenance, target.comodule)
    return c.descend(h, f"free comparison {c.quotient.name}"), target


def linton_map(
    t: MonadInstanceFD, source: LintonCoequalizer, target: LintonCoequalizer, g: LinearMap
) -> LinearMap:
    """V ▶ g: V ▶ M → V ▶ M' for a module map g: M → M'."""
    k = t.algebra.field
    ambient = cotensor_map(
        t.algebra, tensor_map(identity(source.v.dim, k), g), source.free.provenance, target.free.provenance
    )
    return source.descend(target.projection @ ambient, f"{source.v.name} ▶ g")


def linton_associator(
    t: MonadInstanceFD, outer: LintonCoequalizer, inner: LintonCoequalizer, nested: LintonCoequalizer
) -> LinearMap:
    """a_{V,W,M}: (V⊗W) ▶ M → V ▶ (W ▶ M).

    ``outer`` is (V⊗W) ▶ M, ``inner`` is W ▶ M and ``nested`` is V ▶ (W ▶ M).
    The map is induced by T(V ⊗ π_W∘η_{W⊗M}).
    """
    k = t.algebra.field
    into_inner = inner.projection @ t.unit(inner.free.provenance)
    ambient = cotensor_map(
        t.algebra,
        tensor_map(identity(nested.v.dim, k), into_inner),
        outer.free.provenance,
        nested.free.provenance,
    )
    return outer.descend(nested.projection @ ambient, f"associator {outer.quotient.name}")


def _comparison(
    report: Report, name: str, f: Optional[LinearMap], x: TrimoduleModuleFD, y: TrimoduleModuleFD
) -> None:
    if f is None:
        return
    report.add(f"{name}-iso", is_bijective(f), None if is_bijective(f) else f"rank {f.rank()} of {f.shape}")
    report.add(f"{name}-module-map", is_module_morphism(f, x, y))


def _attempt(report: Report, name: str, build) -> Optional[LinearMap]:
    try:
        return build()
    except (DescentError, CorestrictionError) as exc:
        report.add(name, False, str(exc))
        return None


def linton_lemmas(t: MonadInstanceFD, v: LeftComoduleFD, w: LeftComoduleFD, m: TrimoduleModuleFD) -> Report:
    """Unitor, free comparison and associator isomorphisms at one triple."""
    tag = f"{v.name},{w.name},{m.name}"
    report = Report(subject=f"Linton isomorphisms {tag}")
    k_triv = trivial_comodule(t.base)

    unit = linton_coequalizer(t, k_triv, m)
    _comparison(report, f"unitor:{m.name}", _attempt(
        report, f"unitor:{m.name}", lambda: linton_unitor(t, unit)
    ), unit.quotient, m)

    if m.provenance is not None:
        free_case = linton_coequalizer(t, v, m)
        built = _attempt(report, f"free:{v.name},{m.name}", lambda: linton_free_iso(t, free_case))
        if built is not None:
            _comparison(report, f"free:{v.name},{m.name}", built[0], free_case.quotient, built[1])

    outer = linton_coequalizer(t, tensor_comodules(v, w), m)
    inner = linton_coequalizer(t, w, m)
    nested = linton_coequalizer(t, v, inner.quotient)
    _comparison(report, f"associator:{tag}", _attempt(
        report, f"associator:{tag}", lambda: linton_associator(t, outer, inner, nested)
    ), outer.quotient, nested.quotient)
    return report


def check_linton_coherence(
    t: MonadInstanceFD, samples: Sequence[Tuple[LeftComoduleFD, LeftComoduleFD, TrimoduleModuleFD]]
) -> Report:
    """Pentagon at (V, W, V, M), both unit triangles, and strength of the free embedding."""
    report = Report(subject=f"Linton coherence {t.algebra.name}")
    k = t.algebra.field
    k_triv = trivial_comodule(t.base)
    for v, w, m in samples:
        tag = f"{v.name},{w.name},{m.name}"
        try:
            _pentagon(report, t, v, w, v, m)
            _triangles(report, t, v, m, k_triv)
        except DescentError as exc:
            report.add(f"coherence:{tag}", False, str(exc))
        if m.provenance is not None:
            c = linton_coequalizer(t, v, m)
            built = _attempt(report, f"strong:{v.name},{m.name}", lambda: linton_free_iso(t, c))
            if built is not None:
                _comparison(report, f"strong:{v.name},{m.name}", built[0], c.quotient, built[1])
    logger.info("Linton coherence checked", algebra=t.algebra.name, samples=len(samples), passed=report.passed)
    return report


def _pentagon(
    report: Report,
    t: MonadInstanceFD,
    u: LeftComoduleFD,
    v: LeftComoduleFD,
    w: LeftComoduleFD,
    m: TrimoduleModuleFD,
) -> None:
    """a_{U,V,W▶M}∘a_{U⊗V,W,M} = (U ▶ a_{V,W,M})∘a_{U,V⊗W,M}."""
    uv, vw = tensor_comodules(u, v), tensor_comodules(v, w)
    w_m = linton_coequalizer(t, w, m)
    v_wm = linton_coequalizer(t, v, w_m.quotient)
    u_v_wm = linton_coequalizer(t, u, v_wm.quotient)
    uvw_m = linton_coequalizer(t, tensor_comodules(uv, w), m)
    uv_wm = linton_coequalizer(t, uv, w_m.quotient)
    vw_m = linton_coequalizer(t, vw, m)
    u_vwm = linton_coequalizer(t, u, vw_m.quotient)

    lhs = linton_associator(t, uv_wm, v_wm, u_v_wm) @ linton_associator(t, uvw_m, w_m, uv_wm)
    inner = linton_associator(t, vw_m, w_m, v_wm)
    rhs = linton_map(t, u_vwm, u_v_wm, inner) @ linton_associator(t, uvw_m, vw_m, u_vwm)
    report.checks.append(identity_check(f"pentagon:{u.name},{v.name},{w.name},{m.name}", lhs, rhs))


def _triangles(
    report: Report, t: MonadInstanceFD, v: LeftComoduleFD, m: TrimoduleModuleFD, k_triv: LeftComoduleFD
) -> None:
    """(V ▶ l_M)∘a_{V,k,M} = id and l_{V▶M}∘a_{k,V,M} = id."""
    tag = f"{v.name},{m.name}"
    k_m = linton_coequalizer(t, k_triv, m)
    v_m = linton_coequalizer(t, v, m)

    v_k_m = linton_coequalizer(t, tensor_comodules(v, k_triv), m)
    v_km = linton_coequalizer(t, v, k_m.quotient)
    first = linton_map(t, v_km, v_m, linton_unitor(t, k_m)) @ linton_associator(t, v_k_m, k_m, v_km)
    report.checks.append(identity_check(f"triangle-right:{tag}", first, identity(v_m.quotient.dim, t.algebra.field)))

    k_v_m = linton_coequalizer(t, tensor_comodules(k_triv, v), m)
    k_vm = linton_coequalizer(t, k_triv, v_m.quotient)
    second = linton_unitor(t, k_vm) @ linton_associator(t, k_v_m, v_m, k_vm)
    report.checks.append(identity_check(f"triangle-left:{tag}", second, identity(v_m.quotient.dim, t.algebra.field)))


def linton_suite(
    t: MonadInstanceFD, modules: Sequence[TrimoduleModuleFD], pairs: Optional[int] = None
) -> Report:
    """Module checks, the cokernel oracle and the isomorphisms on pool triples.

    ``pairs`` caps the number of (V, W, M) triples the lemmas run on; ``None`` runs them all.
    """
    report = Report(subject=f"Linton suite {t.algebra.name}")
    for v, m in product(t.pool, modules):
        c = linton_coequalizer(t, v, m)
        report.extend(validate_module(c.quotient), prefix=f"{c.quotient.name}:")
        report.extend(linton_oracle(c))
    for (v, w), m in list(product(product(t.pool, repeat=2), modules))[:pairs]:
        report.extend(linton_lemmas(t, v, w, m))
    return report


# ========================
# Reconstruction
# ========================

def reconstruction_identity(t: MonadInstanceFD, samples: int, rng: np.random.Generator) -> Report:
    """Hom(V ▷ X, M) ≅ Hom(V, M) for X the free module on the trivial comodule."""
    a = t.algebra
    report = Report(subject=f"reconstruction {a.name}")
    x = free_module(a, trivial_comodule(t.base))
    report.data["generator-dim"] = x.dim
    targets = [t.free(n) for n in t.pool]
    for v in t.pool:
        acted = act_on_free(v, x)
        report.checks.append(identity_check(
            f"generator:{v.name}", acted.comodule.coaction, t.apply(v).coaction
        ))
        for m in targets:
            bijection = free_forgetful_iso(t, acted.provenance, m)
            report.extend(bijection.certify(samples, rng))
    if t.base.monoid is not None:
        report.data["internal-hom"] = internal_hom_components(t)
    return report


def internal_hom_components(t: MonadInstanceFD) -> Dict[str, Dict[str, int]]:
    """Graded dims of [X, δ_z ▷ X] = A□δ_z for each grouplike z of a pointed base."""
    x = free_module(t.algebra, trivial_comodule(t.base))
    return {
        label: graded_dimensions(act_on_free(simple_graded_comodule(t.base, label), x).comodule)
        for label in t.base.monoid.elements
    }


# ========================
# Fusion operators
# ========================

def fusion_operator(h: BialgebraFD, v: int, w: int) -> LinearMap:
    """H⊗H⊗V⊗W → H⊗V⊗H⊗W, h⊗h'⊗v⊗w ↦ h₁h' ⊗ v ⊗ h₂ ⊗ w."""
    k, n = h.field, h.dim
    i_n, i_v, i_w = identity(n, k), identity(v, k), identity(w, k)
    return (
        tensor_map(h.mul, i_v, i_n, i_w)
        @ permute_legs((n, n, n, v, w), (0, 2, 3, 1, 4), k)
        @ tensor_map(h.comul, i_n, i_v, i_w)
    )


def galois_map(h: BialgebraFD) -> LinearMap:
    """h⊗h' ↦ h₁h' ⊗ h₂."""
    return fusion_operator(h, 1, 1)


def galois_inverse(h: BialgebraFD) -> Optional[LinearMap]:
    """x⊗y ↦ y₂ ⊗ S⁻¹(y₁)x, or None without an antipode."""
    antipode = find_antipode(h)
    if antipode is None:
        return None
    inverse_antipode = invert(antipode)
    if inverse_antipode is None:
        return None
    k, n = h.field, h.dim
    i_n = identity(n, k)
    return (
        tensor_map(i_n, h.mul)
        @ tensor_map(i_n, inverse_antipode, i_n)
        @ permute_legs((n, n, n), (1, 0, 2), k)
        @ tensor_map(h.comul, i_n)
        @ swap(n, n, k)
    )


def is_right_hopf(h: BialgebraFD) -> bool:
    """Whether the Galois map is invertible; must agree with having an antipode."""
    invertible = galois_map(h).rank() == h.dim * h.dim
    has_antipode = find_antipode(h) is not None
    if invertible != has_antipode:
        raise InvariantViolation(
            f"{h.name}: Galois map invertible={invertible} but antipode present={has_antipode}"
        )
    return invertible


def fusion_report(h: BialgebraFD, leg_dims: Sequence[Tuple[int, int]] = ((2, 1), (1, 2))) -> Report:
    """Galois rank, the antipode-built inverse, and inertness of the extra legs."""
    k = h.field
    report = Report(subject=f"fusion {h.name}")
    galois = galois_map(h)
    rank = galois.rank()
    invertible = rank == h.dim * h.dim
    report.data["galois-rank"] = rank
    report.data["right-hopf"] = invertible
    try:
        report.add("hopf-iff-antipode", is_right_hopf(h) == invertible)
    except InvariantViolation as exc:
        report.add("hopf-iff-antipode", False, str(exc))
    inverse = galois_inverse(h)
    if inverse is not None:
        report.checks.append(identity_check("galois-inverse-left", inverse @ galois, identity(h.dim * h.dim, k)))
        report.checks.append(identity_check("galois-inverse-right", galois @ inverse, identity(h.dim * h.dim, k)))
    for v, w in leg_dims:
        fused = fusion_operator(h, v, w)
        size = h.dim * h.dim * v * w
        report.add(f"inert-legs:{v},{w}", (fused.rank() == size) == invertible)
    return report
