"""
Comodules, bicomodules and cotensor products over a finite-dimensional bialgebra.

Coaction matrices follow the global row-major convention:
- left  λ: M → B⊗M has row b·m + l for the basis vector e_b ⊗ m_l
- right ρ: M → M⊗B has row l·n + b for the basis vector m_l ⊗ e_b
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..core.errors import (
    BaseMismatchError,
    CorestrictionError,
    DescentError,
    GradingError,
    ShapeError,
)
from ..core.logging import get_logger
from ..models.schemas import Report
from .bialgebra import BialgebraFD
from .exact_kernel import (
    LinearMap,
    Sandwich,
    ScalarField,
    Subspace,
    cokernel_projection,
    corestrict,
    corestrict_tensor,
    hstack,
    identity,
    identity_check,
    kernel_basis,
    left_identity_terms,
    left_inverse,
    map_space,
    right_identity_terms,
    solve_map_equations,
    solve_right_inverse,
    subspace_intersection,
    swap,
    tensor_apply,
    tensor_map,
)

logger = get_logger(__name__)


# ========================
# Structures
# ========================

@dataclass(frozen=True)
class LeftComoduleFD:
    """λ: M → B⊗M."""

    base: BialgebraFD
    dim: int
    coaction: LinearMap
    name: str = "M"

    def __post_init__(self) -> None:
        expected = (self.base.dim * self.dim, self.dim)
        if self.coaction.shape != expected:
            raise ShapeError(f"left coaction of {self.name} has shape {self.coaction.shape}, expected {expected}")

    @property
    def field(self) -> ScalarField:
        return self.base.field

    @property
    def left_coaction(self) -> LinearMap:
        return self.coaction

    @property
    def right_coaction(self) -> Optional[LinearMap]:
        return None

    def block(self, b: int) -> LinearMap:
        """The m×m coefficient matrix of e_b in λ."""
        return self.coaction.select_rows(range(b * self.dim, (b + 1) * self.dim))


@dataclass(frozen=True)
class RightComoduleFD:
    """ρ: M → M⊗B."""

    base: BialgebraFD
    dim: int
    coaction: LinearMap
    name: str = "M"

    def __post_init__(self) -> None:
        expected = (self.dim * self.base.dim, self.dim)
        if self.coaction.shape != expected:
            raise ShapeError(f"right coaction of {self.name} has shape {self.coaction.shape}, expected {expected}")

    @property
    def field(self) -> ScalarField:
        return self.base.field

    @property
    def left_coaction(self) -> Optional[LinearMap]:
        return None

    @property
    def right_coaction(self) -> LinearMap:
        return self.coaction

    def block(self, b: int) -> LinearMap:
        n = self.base.dim
        return self.coaction.select_rows([l * n + b for l in range(self.dim)])


@dataclass(frozen=True)
class BicomoduleFD:
    """A space with commuting left and right coactions."""

    base: BialgebraFD
    dim: int
    left: LinearMap
    right: LinearMap
    name: str = "X"

    def __post_init__(self) -> None:
        n = self.base.dim
        if self.left.shape != (n * self.dim, self.dim):
            raise ShapeError(f"left coaction of {self.name} has shape {self.left.shape}")
        if self.right.shape != (self.dim * n, self.dim):
            raise ShapeError(f"right coaction of {self.name} has shape {self.right.shape}")

    @property
    def field(self) -> ScalarField:
        return self.base.field

    @property
    def left_coaction(self) -> LinearMap:
        return self.left

    @property
    def right_coaction(self) -> LinearMap:
        return self.right

    @property
    def left_comodule(self) -> LeftComoduleFD:
        return LeftComoduleFD(self.base, self.dim, self.left, self.name)

    @property
    def right_comodule(self) -> RightComoduleFD:
        return RightComoduleFD(self.base, self.dim, self.right, self.name)


@dataclass(frozen=True)
class CotensorSpace:
    """X □ Y as a subspace of X⊗Y, with whatever coactions it inherits."""

    first: Any
    second: Any
    subspace: Subspace
    left_coaction: Optional[LinearMap]
    right_coaction: Optional[LinearMap]
    name: str = ""

    @property
    def base(self) -> BialgebraFD:
        return self.first.base

    @property
    def field(self) -> ScalarField:
        return self.first.base.field

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def inclusion(self) -> LinearMap:
        return self.subspace.inclusion

    @property
    def ambient(self) -> int:
        return self.subspace.ambient

    @cached_property
    def retraction(self) -> LinearMap:
        return left_inverse(self.inclusion)

    def lift(self, f: LinearMap, containment: str = "") -> LinearMap:
        """Coordinates of the columns of f, which must lie in this subspace."""
        g = self.retraction @ f
        if self.inclusion @ g != f:
            logger.debug("Lift failed", space=self.name, shape=f.shape)
            raise CorestrictionError(containment or self.name)
        return g

    def as_left_comodule(self) -> LeftComoduleFD:
        if self.left_coaction is None:
            raise ShapeError(f"{self.name} carries no left coaction")
        return LeftComoduleFD(self.base, self.dim, self.left_coaction, self.name)

    def as_right_comodule(self) -> RightComoduleFD:
        if self.right_coaction is None:
            raise ShapeError(f"{self.name} carries no right coaction")
        return RightComoduleFD(self.base, self.dim, self.right_coaction, self.name)

    def as_bicomodule(self) -> BicomoduleFD:
        if self.left_coaction is None or self.right_coaction is None:
            raise ShapeError(f"{self.name} is not a bicomodule")
        return BicomoduleFD(self.base, self.dim, self.left_coaction, self.right_coaction, self.name)


Comodule = Union[LeftComoduleFD, RightComoduleFD, BicomoduleFD, CotensorSpace]


def require_same_base(*objects: Any) -> BialgebraFD:
    """The common base of several comodules; raises when they differ."""
    base = objects[0].base
    for other in objects[1:]:
        if other.base is not base and other.base.fingerprint != base.fingerprint:
            raise BaseMismatchError(f"{base.name} and {other.base.name} are different bases")
    return base


# ========================
# Validation
# ========================

def validate_left_comodule(m: LeftComoduleFD) -> Report:
    b, k = m.base, m.field
    i_m, i_n = identity(m.dim, k), identity(b.dim, k)
    lam = m.coaction
    report = Report(subject=f"left comodule {m.name}")
    report.checks.extend([
        identity_check("coassoc", tensor_map(b.comul, i_m) @ lam, tensor_map(i_n, lam) @ lam),
        identity_check("counit", tensor_map(b.counit, i_m) @ lam, i_m),
    ])
    return report


def validate_right_comodule(m: RightComoduleFD) -> Report:
    b, k = m.base, m.field
    i_m, i_n = identity(m.dim, k), identity(b.dim, k)
    rho = m.coaction
    report = Report(subject=f"right comodule {m.name}")
    report.checks.extend([
        identity_check("coassoc", tensor_map(rho, i_n) @ rho, tensor_map(i_m, b.comul) @ rho),
        identity_check("counit", tensor_map(i_m, b.counit) @ rho, i_m),
    ])
    return report


def validate_bicomodule(x: BicomoduleFD) -> Report:
    """Both comodule laws and (B⊗ρ)∘λ = (λ⊗B)∘ρ."""
    k = x.field
    i_n = identity(x.base.dim, k)
    report = Report(subject=f"bicomodule {x.name}")
    report.extend(validate_left_comodule(x.left_comodule), prefix="left-")
    report.extend(validate_right_comodule(x.right_comodule), prefix="right-")
    report.checks.append(
        identity_check("compatibility", tensor_map(i_n, x.right) @ x.left, tensor_map(x.left, i_n) @ x.right)
    )
    return report


# ========================
# Builders
# ========================

def cofree_comodule(base: BialgebraFD, d: int, name: Optional[str] = None) -> LeftComoduleFD:
    """B⊗V with coaction Δ⊗id."""
    k = base.field
    return LeftComoduleFD(
        base, base.dim * d, tensor_map(base.comul, identity(d, k)), name or f"{base.name}⊗k^{d}"
    )


def regular_left_comodule(base: BialgebraFD) -> LeftComoduleFD:
    return LeftComoduleFD(base, base.dim, base.comul, f"{base.name}_reg")


def regular_right_comodule(base: BialgebraFD) -> RightComoduleFD:
    return RightComoduleFD(base, base.dim, base.comul, f"{base.name}_reg")


def regular_bicomodule(base: BialgebraFD) -> BicomoduleFD:
    return BicomoduleFD(base, base.dim, base.comul, base.comul, f"{base.name}_reg")


def trivial_comodule(base: BialgebraFD) -> LeftComoduleFD:
    """k with λ(v) = 1⊗v."""
    return LeftComoduleFD(base, 1, base.unit, "k_triv")


def zero_comodule(base: BialgebraFD) -> LeftComoduleFD:
    return LeftComoduleFD(base, 0, LinearMap.zero(0, 0, base.field), "0")


def simple_graded_comodule(base: BialgebraFD, z: Union[str, int]) -> LeftComoduleFD:
    """δ_z: the 1-dim comodule λ(v) = z⊗v over a monoid bialgebra."""
    if base.monoid is None:
        raise GradingError(f"{base.name} is not pointed by construction")
    index = base.monoid.index(z) if isinstance(z, str) else z
    label = base.monoid.elements[index]
    coaction = LinearMap.from_entries(base.dim, 1, {(index, 0): 1}, base.field)
    return LeftComoduleFD(base, 1, coaction, f"δ_{label}")


def graded_dimensions(m: LeftComoduleFD) -> Dict[str, int]:
    """Nonzero dims of the homogeneous components of a comodule over k[S]."""
    if m.base.monoid is None:
        raise GradingError(f"{m.base.name} is not pointed by construction")
    dims = {m.base.monoid.elements[z]: m.block(z).rank() for z in range(m.base.dim)}
    return {label: d for label, d in dims.items() if d}


def subcomodule(m: LeftComoduleFD, vectors: Sequence[LinearMap], name: str = "") -> LeftComoduleFD:
    """The subcomodule spanned by ``vectors``, in the order given."""
    inclusion = hstack(list(vectors), rows=m.dim, field=m.field)
    n = m.base.dim
    coaction = corestrict(
        tensor_map(identity(n, m.field), inclusion),
        m.coaction @ inclusion,
        f"B⊗span in {m.name}",
    )
    return LeftComoduleFD(m.base, inclusion.cols, coaction, name or f"sub({m.name})")


def sweedler_two_dim_comodule(base: BialgebraFD) -> LeftComoduleFD:
    """span{1, x} inside the regular comodule of Sweedler's algebra: non-simple, 2-dim."""
    regular = regular_left_comodule(base)
    vectors = [
        LinearMap.from_entries(base.dim, 1, {(i, 0): 1}, base.field) for i in (0, 2)
    ]
    return subcomodule(regular, vectors, "span{1,x}")


def tensor_comodules(m: LeftComoduleFD, p: LeftComoduleFD) -> LeftComoduleFD:
    """M⊗P with the diagonal coaction v⊗w ↦ v₋₁w₋₁ ⊗ v₀ ⊗ w₀."""
    base = require_same_base(m, p)
    k, n = base.field, base.dim
    coaction = (
        tensor_map(base.mul, identity(m.dim, k), identity(p.dim, k))
        @ tensor_map(identity(n, k), swap(m.dim, n, k), identity(p.dim, k))
        @ tensor_map(m.coaction, p.coaction)
    )
    return LeftComoduleFD(base, m.dim * p.dim, coaction, f"{m.name}⊗{p.name}")


# ========================
# Morphisms
# ========================

def left_colinear_terms(
    source: LinearMap, target: LinearMap, n: int, rows: int, cols: int
) -> List[Sandwich]:
    """(id_B ⊗ X)∘λ_source − λ_target∘X, for X: cols → rows."""
    k = source.field
    return left_identity_terms(identity(n * rows, k), source, n, rows, cols) + [
        Sandwich(target, identity(cols, k), -1)
    ]


def right_colinear_terms(
    source: LinearMap, target: LinearMap, n: int, rows: int, cols: int
) -> List[Sandwich]:
    """(X ⊗ id_B)∘ρ_source − ρ_target∘X."""
    k = source.field
    return right_identity_terms(identity(rows * n, k), source, n, rows, cols) + [
        Sandwich(target, identity(cols, k), -1)
    ]


def is_left_colinear(f: LinearMap, source: LinearMap, target: LinearMap, n: int) -> bool:
    return tensor_map(identity(n, f.field), f) @ source == target @ f


def comodule_hom_space(m: LeftComoduleFD, p: LeftComoduleFD) -> List[LinearMap]:
    """A basis of {f : (B⊗f)∘λ_m = λ_p∘f}."""
    base = require_same_base(m, p)
    equations = [left_colinear_terms(m.coaction, p.coaction, base.dim, p.dim, m.dim)]
    basis = map_space(p.dim, m.dim, equations, base.field)
    logger.debug("Comodule hom space", source=m.name, target=p.name, dim=len(basis))
    return basis


def right_comodule_hom_space(m: RightComoduleFD, p: RightComoduleFD) -> List[LinearMap]:
    base = require_same_base(m, p)
    equations = [right_colinear_terms(m.coaction, p.coaction, base.dim, p.dim, m.dim)]
    return map_space(p.dim, m.dim, equations, base.field)


def is_injective_comodule(m: LeftComoduleFD) -> bool:
    """Whether λ: M → B⊗M splits by a comodule map out of the cofree comodule."""
    base = m.base
    n, k, d = base.dim, base.field, m.dim
    cofree = tensor_map(base.comul, identity(d, k))
    equations = [
        (left_colinear_terms(cofree, m.coaction, n, d, n * d), LinearMap.zero(n * d, n * d, k)),
        ([Sandwich(identity(d, k), m.coaction)], identity(d, k)),
    ]
    retraction = solve_map_equations(d, n * d, equations, k)
    logger.debug("Injectivity test", comodule=m.name, injective=retraction is not None)
    return retraction is not None


def right_coinvariants(x: Union[RightComoduleFD, BicomoduleFD, Any]) -> Subspace:
    """X^{coB} = ker(ρ − id⊗η)."""
    k = x.field
    return kernel_basis(x.right_coaction - tensor_map(identity(x.dim, k), x.base.unit))


def quotient_comodule(
    m: LeftComoduleFD, f: LinearMap, name: str = ""
) -> Tuple[LeftComoduleFD, LinearMap]:
    """The cokernel of a comodule map f: P → M with its descended coaction.

    Returns the quotient comodule and the projection M → Q.
    """
    if f.rows != m.dim:
        raise ShapeError(f"map with {f.rows} rows does not land in {m.name} of dim {m.dim}")
    k, n = m.field, m.base.dim
    q, projection = cokernel_projection(f)
    section = solve_right_inverse(projection)
    if section is None:
        raise DescentError("cokernel projection has no section")
    lifted = tensor_map(identity(n, k), projection) @ m.coaction
    coaction = lifted @ section
    if coaction @ projection != lifted:
        raise DescentError(f"coaction of {m.name} does not descend to the cokernel")
    return LeftComoduleFD(m.base, q, coaction, name or f"{m.name}/im"), projection


# ========================
# Cotensor products
# ========================

def cotensor(x: Any, y: Any, name: Optional[str] = None) -> CotensorSpace:
    """X □ Y = ker(ρ_X ⊗ id − id ⊗ λ_Y) inside X⊗Y, with inherited coactions.

    Results are memoized on the (immutable) factors; unhashable factors are computed afresh.
    """
    try:
        hash((x, y))
    except TypeError:
        return _cotensor(x, y, name)
    return _cached_cotensor(x, y, name)


def _cotensor(x: Any, y: Any, name: Optional[str]) -> CotensorSpace:
    base = require_same_base(x, y)
    rho, lam = x.right_coaction, y.left_coaction
    if rho is None:
        raise ShapeError(f"{getattr(x, 'name', 'X')} has no right coaction")
    if lam is None:
        raise ShapeError(f"{getattr(y, 'name', 'Y')} has no left coaction")
    k, n = base.field, base.dim
    i_x, i_y = identity(x.dim, k), identity(y.dim, k)
    subspace = kernel_basis(tensor_map(rho, i_y) - tensor_map(i_x, lam))
    inclusion = subspace.inclusion
    label = name or f"{getattr(x, 'name', 'X')}□{getattr(y, 'name', 'Y')}"

    left = right = None
    if x.left_coaction is not None or y.right_coaction is not None:
        retraction, i_n = left_inverse(inclusion), identity(n, k)
        if x.left_coaction is not None:
            left = corestrict_tensor(
                i_n,
                inclusion,
                tensor_apply(x.left_coaction, i_y, inclusion),
                f"B⊗({label})",
                (i_n, retraction),
            )
        if y.right_coaction is not None:
            right = corestrict_tensor(
                inclusion,
                i_n,
                tensor_apply(i_x, y.right_coaction, inclusion),
                f"({label})⊗B",
                (retraction, i_n),
            )
    logger.debug("Cotensor computed", name=label, ambient=x.dim * y.dim, dim=subspace.dim)
    return CotensorSpace(x, y, subspace, left, right, label)


_cached_cotensor = lru_cache(maxsize=2048)(_cotensor)


def induced_map(
    source: CotensorSpace, target: CotensorSpace, ambient: LinearMap, containment: str = ""
) -> LinearMap:
    """The map source → target restricting an ambient map between the tensor products."""
    return target.lift(ambient @ source.inclusion, containment or target.name)


def cotensor_map_right(x: Any, f: LinearMap, source: CotensorSpace, target: CotensorSpace) -> LinearMap:
    """X □ f, for a left comodule map f between the second factors."""
    return induced_map(source, target, tensor_map(identity(x.dim, f.field), f))


def cotensor_map_left(f: LinearMap, y: Any, source: CotensorSpace, target: CotensorSpace) -> LinearMap:
    """f □ Y, for a right comodule map f between the first factors."""
    return induced_map(source, target, tensor_map(f, identity(y.dim, f.field)))


def triple_cotensor(x: Any, y: Any, z: Any) -> Subspace:
    """X □ Y □ Z as the intersection of both cotensor conditions inside X⊗Y⊗Z."""
    base = require_same_base(x, y, z)
    k = base.field
    i_x, i_y, i_z = identity(x.dim, k), identity(y.dim, k), identity(z.dim, k)
    first = kernel_basis(
        tensor_map(x.right_coaction, i_y, i_z) - tensor_map(i_x, y.left_coaction, i_z)
    )
    second = kernel_basis(
        tensor_map(i_x, y.right_coaction, i_z) - tensor_map(i_x, i_y, z.left_coaction)
    )
    return subspace_intersection(first, second)


def iterated_cotensor_subspace(x: Any, y: Any, z: Any, left_first: bool = True) -> Subspace:
    """(X□Y)□Z or X□(Y□Z), embedded in X⊗Y⊗Z."""
    k = x.field
    if left_first:
        inner = cotensor(x, y)
        outer = cotensor(inner, z)
        embedding = tensor_map(inner.inclusion, identity(z.dim, k)) @ outer.inclusion
    else:
        inner = cotensor(y, z)
        outer = cotensor(x, inner)
        embedding = tensor_map(identity(x.dim, k), inner.inclusion) @ outer.inclusion
    return Subspace(embedding)


def counit_unitor(m: Any) -> LinearMap:
    """ε □ id: B □ M → M restricted from ε ⊗ id."""
    regular = regular_bicomodule(m.base)
    space = cotensor(regular, m)
    return tensor_map(m.base.counit, identity(m.dim, m.field)) @ space.inclusion


def is_bijective(f: LinearMap) -> bool:
    return f.rows == f.cols and f.rank() == f.rows


def checked_corestrict(
    report: Report, name: str, inclusion: LinearMap, f: LinearMap
) -> Optional[LinearMap]:
    """Corestrict, recording a failing check instead of raising."""
    try:
        return corestrict(inclusion, f, name)
    except CorestrictionError as exc:
        report.add(name, False, str(exc))
        return None
