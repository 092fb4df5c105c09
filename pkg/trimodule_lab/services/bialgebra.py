"""
Finite-dimensional algebras, coalgebras and bialgebras by structure constants.

Conventions: mul(e_i ⊗ e_j) = Σ_k μ_ij^k e_k is column i·n + j of ``mul``;
comul(e_i) = Σ Δ_i^jk e_j ⊗ e_k is column i of ``comul`` with row j·n + k.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.errors import NotAMonoidError, ShapeError, UnsupportedFieldError
from ..core.logging import get_logger
from ..models.schemas import Report
from .exact_kernel import (
    QQ,
    LinearMap,
    LinearSolution,
    ScalarField,
    Subspace,
    identity,
    identity_check,
    left_identity_terms,
    map_equation_system,
    kernel_basis,
    right_identity_terms,
    solve_linear,
    swap,
    tensor_map,
    unvectorize,
    vstack,
)

logger = get_logger(__name__)


# ========================
# Structures
# ========================

@dataclass(frozen=True)
class AlgebraFD:
    """An associative unital algebra on k^dim."""

    dim: int
    mul: LinearMap
    unit: LinearMap

    def __post_init__(self) -> None:
        if self.mul.shape != (self.dim, self.dim * self.dim):
            raise ShapeError(f"mul has shape {self.mul.shape}, expected ({self.dim}, {self.dim ** 2})")
        if self.unit.shape != (self.dim, 1):
            raise ShapeError(f"unit has shape {self.unit.shape}, expected ({self.dim}, 1)")

    @property
    def field(self) -> ScalarField:
        return self.mul.field

    def basis_vector(self, i: int) -> LinearMap:
        return LinearMap.from_entries(self.dim, 1, {(i, 0): 1}, self.field)

    def product(self, x: LinearMap, y: LinearMap) -> LinearMap:
        return self.mul @ tensor_map(x, y)

    def left_multiplication(self, x: LinearMap) -> LinearMap:
        """L_x = mul ∘ (x ⊗ id)."""
        return self.mul @ tensor_map(x, identity(self.dim, self.field))

    def right_multiplication(self, x: LinearMap) -> LinearMap:
        return self.mul @ tensor_map(identity(self.dim, self.field), x)


@dataclass(frozen=True)
class CoalgebraFD:
    """A coassociative counital coalgebra on k^dim."""

    dim: int
    comul: LinearMap
    counit: LinearMap

    def __post_init__(self) -> None:
        if self.comul.shape != (self.dim * self.dim, self.dim):
            raise ShapeError(f"comul has shape {self.comul.shape}, expected ({self.dim ** 2}, {self.dim})")
        if self.counit.shape != (1, self.dim):
            raise ShapeError(f"counit has shape {self.counit.shape}, expected (1, {self.dim})")

    @property
    def field(self) -> ScalarField:
        return self.comul.field


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid by its multiplication table over element indices."""

    elements: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    name: str = "S"

    def __post_init__(self) -> None:
        n = len(self.elements)
        if n == 0:
            raise NotAMonoidError("a monoid has at least one element")
        if len(set(self.elements)) != n:
            raise NotAMonoidError("element names are not distinct")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise NotAMonoidError(f"table is not {n}x{n}")
        if any(not 0 <= v < n for row in self.table for v in row):
            raise NotAMonoidError("table entry outside the element set")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise NotAMonoidError(
                            f"({self.elements[a]}{self.elements[b]}){self.elements[c]} "
                            f"!= {self.elements[a]}({self.elements[b]}{self.elements[c]})"
                        )
        if self.identity_index is None:
            raise NotAMonoidError("table has no two-sided identity")

    @classmethod
    def from_names(
        cls, elements: Sequence[str], table: Sequence[Sequence[str]], name: str = "S"
    ) -> "FiniteMonoid":
        """Build from a table whose entries are element names."""
        index = {e: i for i, e in enumerate(elements)}
        try:
            rows = tuple(tuple(index[v] for v in row) for row in table)
        except KeyError as exc:
            raise NotAMonoidError(f"unknown element {exc.args[0]!r} in table") from exc
        return cls(tuple(elements), rows, name)

    @classmethod
    def cyclic(cls, order: int) -> "FiniteMonoid":
        """The cyclic group Z/order with elements e, g, g^2, ..."""
        names = tuple(["e", "g"] + [f"g^{k}" for k in range(2, order)])[:order]
        table = tuple(tuple((a + b) % order for b in range(order)) for a in range(order))
        return cls(names, table, f"Z/{order}")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> Optional[int]:
        n = len(self.elements)
        for e in range(n):
            if all(self.table[e][a] == a and self.table[a][e] == a for a in range(n)):
                return e
        return None

    def index(self, element: str) -> int:
        return self.elements.index(element)

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]


@dataclass(frozen=True)
class BialgebraFD:
    """An algebra and a coalgebra on the same space, with optional monoid grading."""

    algebra: AlgebraFD
    coalgebra: CoalgebraFD
    name: str = "B"
    labels: Tuple[str, ...] = ()
    monoid: Optional[FiniteMonoid] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.algebra.dim != self.coalgebra.dim:
            raise ShapeError(
                f"algebra dim {self.algebra.dim} differs from coalgebra dim {self.coalgebra.dim}"
            )
        if self.labels and len(self.labels) != self.algebra.dim:
            raise ShapeError(f"{len(self.labels)} labels for a {self.algebra.dim}-dim space")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> ScalarField:
        return self.algebra.field

    @property
    def mul(self) -> LinearMap:
        return self.algebra.mul

    @property
    def unit(self) -> LinearMap:
        return self.algebra.unit

    @property
    def comul(self) -> LinearMap:
        return self.coalgebra.comul

    @property
    def counit(self) -> LinearMap:
        return self.coalgebra.counit

    @property
    def unit_counit(self) -> LinearMap:
        """η ∘ ε, the unit of the convolution algebra End(B)."""
        return self.unit @ self.counit

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    @cached_property
    def fingerprint(self) -> str:
        """Content hash of the structure constants, used to detect mixed bases."""
        text = "|".join(
            [str(self.field.characteristic)]
            + [repr(m) for m in (self.mul, self.unit, self.comul, self.counit)]
        )
        return hashlib.sha256(text.encode("utf-8")).hexdigest()


def bialgebra_from_maps(
    mul: LinearMap,
    unit: LinearMap,
    comul: LinearMap,
    counit: LinearMap,
    name: str = "B",
    labels: Sequence[str] = (),
    monoid: Optional[FiniteMonoid] = None,
) -> BialgebraFD:
    n = unit.rows
    return BialgebraFD(
        AlgebraFD(n, mul, unit), CoalgebraFD(n, comul, counit), name, tuple(labels), monoid
    )


# ========================
# Validation
# ========================

def validate_algebra(a: AlgebraFD) -> Report:
    n, k = a.dim, a.field
    i_n = identity(n, k)
    report = Report(subject="algebra")
    report.checks.extend([
        identity_check("assoc", a.mul @ tensor_map(a.mul, i_n), a.mul @ tensor_map(i_n, a.mul)),
        identity_check("unit-left", a.mul @ tensor_map(a.unit, i_n), i_n),
        identity_check("unit-right", a.mul @ tensor_map(i_n, a.unit), i_n),
    ])
    return report


def validate_coalgebra(c: CoalgebraFD) -> Report:
    n, k = c.dim, c.field
    i_n = identity(n, k)
    report = Report(subject="coalgebra")
    report.checks.extend([
        identity_check("coassoc", tensor_map(c.comul, i_n) @ c.comul, tensor_map(i_n, c.comul) @ c.comul),
        identity_check("counit-left", tensor_map(c.counit, i_n) @ c.comul, i_n),
        identity_check("counit-right", tensor_map(i_n, c.counit) @ c.comul, i_n),
    ])
    return report


def validate_bialgebra(b: BialgebraFD) -> Report:
    """Run every bialgebra axiom as an exact matrix identity."""
    n, k = b.dim, b.field
    i_n = identity(n, k)
    middle = tensor_map(i_n, swap(n, n, k), i_n)

    report = Report(subject=f"bialgebra {b.name}")
    report.extend(validate_algebra(b.algebra))
    report.extend(validate_coalgebra(b.coalgebra))
    report.checks.extend([
        identity_check(
            "comul-multiplicative",
            b.comul @ b.mul,
            tensor_map(b.mul, b.mul) @ middle @ tensor_map(b.comul, b.comul),
        ),
        identity_check("counit-multiplicative", b.counit @ b.mul, tensor_map(b.counit, b.counit)),
        identity_check("comul-unit", b.comul @ b.unit, tensor_map(b.unit, b.unit)),
        identity_check("counit-unit", b.counit @ b.unit, identity(1, k)),
    ])
    logger.debug("Validated bialgebra", name=b.name, dim=n, passed=report.passed)
    return report


# ========================
# Convolution and antipodes
# ========================

def convolution(f: LinearMap, g: LinearMap, c: CoalgebraFD, a: AlgebraFD) -> LinearMap:
    """f * g = mul ∘ (f ⊗ g) ∘ comul."""
    for name, h in (("f", f), ("g", g)):
        if h.shape != (a.dim, c.dim):
            raise ShapeError(f"{name} has shape {h.shape}, expected ({a.dim}, {c.dim})")
    return a.mul @ tensor_map(f, g) @ c.comul


def op_cop(b: BialgebraFD, flip_mul: bool, flip_comul: bool) -> BialgebraFD:
    """The opposite and/or co-opposite bialgebra on the same space."""
    if not flip_mul and not flip_comul:
        return b
    tau = swap(b.dim, b.dim, b.field)
    mul = b.mul @ tau if flip_mul else b.mul
    comul = tau @ b.comul if flip_comul else b.comul
    suffix = ("^op" if flip_mul else "") + ("^cop" if flip_comul else "")
    return bialgebra_from_maps(
        mul, b.unit, comul, b.counit, b.name + suffix, b.labels,
        None if flip_mul else b.monoid,
    )


def antipode_system(b: BialgebraFD, twisted: bool = False) -> LinearSolution:
    """Solve S * id = η∘ε = id * S as one stacked system over the entries of S.

    The solution, when present, is returned already reshaped to an n×n map;
    ``rank`` < ``augmented_rank`` certifies that no antipode exists.
    """
    h = op_cop(b, False, True) if twisted else b
    n, k = h.dim, h.field
    target = h.unit_counit
    equations = [
        (right_identity_terms(h.mul, h.comul, n, n, n), target),
        (left_identity_terms(h.mul, h.comul, n, n, n), target),
    ]
    coefficients, rhs = map_equation_system(n, n, equations, k)
    result = solve_linear(coefficients, rhs)
    logger.debug(
        "Antipode system solved",
        name=h.name,
        rank=result.rank,
        augmented_rank=result.augmented_rank,
        solvable=result.solvable,
    )
    solution = None if result.solution is None else unvectorize(result.solution, n, n)
    return LinearSolution(solution, result.rank, result.augmented_rank)


def find_antipode(b: BialgebraFD) -> Optional[LinearMap]:
    """The convolution inverse of the identity, if there is one."""
    return antipode_system(b).solution


def find_twisted_antipode(b: BialgebraFD) -> Optional[LinearMap]:
    """The antipode of the co-opposite bialgebra, read on the same space."""
    return antipode_system(b, twisted=True).solution


def is_grouplike(b: BialgebraFD, v: LinearMap) -> bool:
    """Δv = v ⊗ v and ε(v) = 1."""
    return b.comul @ v == tensor_map(v, v) and b.counit @ v == identity(1, b.field)


def grouplike_elements(b: BialgebraFD) -> List[Tuple[str, LinearMap]]:
    """The grouplike basis of a monoid bialgebra."""
    if b.monoid is None:
        raise NotAMonoidError(f"{b.name} is not given as a monoid bialgebra")
    return [
        (name, LinearMap.from_entries(b.dim, 1, {(i, 0): 1}, b.field))
        for i, name in enumerate(b.monoid.elements)
    ]


# ========================
# Builders
# ========================

def monoid_bialgebra(monoid: FiniteMonoid, field: ScalarField = QQ) -> BialgebraFD:
    """k[S]: basis the monoid elements, every element grouplike."""
    n = monoid.order
    mul = LinearMap.from_entries(
        n, n * n, {(monoid.multiply(i, j), i * n + j): 1 for i in range(n) for j in range(n)}, field
    )
    unit = LinearMap.from_entries(n, 1, {(monoid.identity_index, 0): 1}, field)
    comul = LinearMap.from_entries(n * n, n, {(i * n + i, i): 1 for i in range(n)}, field)
    counit = LinearMap.from_rows([[1] * n], field, cols=n)
    logger.debug("Built monoid bialgebra", monoid=monoid.name, order=n)
    return bialgebra_from_maps(
        mul, unit, comul, counit, f"k[{monoid.name}]", monoid.elements, monoid
    )


def trivial_bialgebra(field: ScalarField = QQ) -> BialgebraFD:
    """The ground field k as a 1-dim bialgebra."""
    b = monoid_bialgebra(FiniteMonoid(("e",), ((0,),), "1"), field)
    return bialgebra_from_maps(b.mul, b.unit, b.comul, b.counit, "k", b.labels, b.monoid)


def group_bialgebra(order: int, field: ScalarField = QQ) -> BialgebraFD:
    return monoid_bialgebra(FiniteMonoid.cyclic(order), field)


def sweedler_h4(field: ScalarField = QQ) -> BialgebraFD:
    """Sweedler's 4-dim Hopf algebra on the basis 1, g, x, gx.

    g^a x^b sits at index a + 2b; x g = -g x, g² = 1, x² = 0.
    """
    if field.characteristic == 2:
        raise UnsupportedFieldError("Sweedler's algebra needs characteristic other than 2")

    def index(a: int, b: int) -> int:
        return a + 2 * b

    mul: Dict[Tuple[int, int], int] = {}
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    if b + d > 1:
                        continue
                    sign = -1 if b * c else 1
                    mul[(index((a + c) % 2, b + d), index(a, b) * 4 + index(c, d))] = sign

    comul = {
        (0 * 4 + 0, 0): 1,  # Δ1 = 1⊗1
        (1 * 4 + 1, 1): 1,  # Δg = g⊗g
        (2 * 4 + 0, 2): 1,  # Δx = x⊗1 + g⊗x
        (1 * 4 + 2, 2): 1,
        (3 * 4 + 1, 3): 1,  # Δ(gx) = gx⊗g + 1⊗gx
        (0 * 4 + 3, 3): 1,
    }
    return bialgebra_from_maps(
        LinearMap.from_entries(4, 16, mul, field),
        LinearMap.from_entries(4, 1, {(0, 0): 1}, field),
        LinearMap.from_entries(16, 4, comul, field),
        LinearMap.from_rows([[1, 1, 0, 0]], field),
        "H4",
        ("1", "g", "x", "gx"),
    )


# ========================
# Semisimplicity
# ========================

def regular_algebra_trace_form(a: AlgebraFD) -> LinearMap:
    """The matrix tr(L_{e_i e_j}) of the trace form of the regular representation."""
    n = a.dim
    traces = LinearMap.row_vector(
        [sum((a.mul[l, k * n + l] for l in range(n)), a.field.zero) for k in range(n)], a.field
    )
    flat = traces @ a.mul
    return LinearMap(flat.entries.reshape(n, n).copy(), a.field)


def is_semisimple_algebra(a: AlgebraFD) -> bool:
    """Nondegeneracy of the trace form; valid in characteristic 0 only."""
    if a.field.characteristic != 0:
        raise UnsupportedFieldError("the trace form criterion needs characteristic 0")
    return regular_algebra_trace_form(a).rank() == a.dim


def algebra_center(a: AlgebraFD) -> Subspace:
    """Z(A) = {z : z·e_i = e_i·z for every basis vector}."""
    n, k = a.dim, a.field
    if n == 0:
        return kernel_basis(LinearMap.zero(0, 0, k))
    conditions = [
        a.right_multiplication(a.basis_vector(i)) - a.left_multiplication(a.basis_vector(i))
        for i in range(n)
    ]
    return kernel_basis(vstack(conditions, cols=n, field=k))
