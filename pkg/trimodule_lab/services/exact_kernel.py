"""
Exact linear algebra over the rationals or a prime field.

Implements:
- Scalar fields (``fractions.Fraction`` for the rationals, residues mod p)
- ``LinearMap``: dense exact matrices held in numpy object arrays
- Sparse Gauss-Jordan elimination with rank certificates
- Kernels, cokernels, subspaces, intersections and corestriction
- Linear systems whose unknown is itself a matrix (``Sandwich`` terms)

Tensor products use the row-major convention everywhere: the basis vector
e_i (x) e_j of V (x) W has index i * dim(W) + j.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.errors import CorestrictionError, FieldMismatchError, ShapeError
from ..core.logging import get_logger
from ..models.schemas import CheckResult, FieldKind, FieldSpec

logger = get_logger(__name__)

_RATIONAL = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")
_RESIDUE = re.compile(r"^(0|[1-9][0-9]*)$")


# ========================
# Scalars
# ========================

class Residue:
    """An element of the prime field Z/p."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _lift(self, other: object) -> Optional[int]:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise FieldMismatchError(f"Z/{self.modulus} against Z/{other.modulus}")
            return other.value
        if isinstance(other, bool):
            return int(other)
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.modulus)
        return None

    def __add__(self, other: object) -> "Residue":
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Residue":
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Residue(self.value - v, self.modulus)

    def __rsub__(self, other: object) -> "Residue":
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Residue(v - self.value, self.modulus)

    def __mul__(self, other: object) -> "Residue":
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Residue":
        v = self._lift(other)
        if v is None:
            return NotImplemented
        if v % self.modulus == 0:
            raise ZeroDivisionError("division by zero residue")
        return Residue(self.value * pow(v, -1, self.modulus), self.modulus)

    def __rtruediv__(self, other: object) -> "Residue":
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Residue(v, self.modulus) / self

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return (v - self.value) % self.modulus == 0

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


Scalar = Union[int, Fraction, Residue]
SparseRow = Dict[int, Scalar]


def _normalize(x: Fraction) -> Union[int, Fraction]:
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class ScalarField:
    """The ground field k: characteristic 0 means the rationals."""

    characteristic: int = 0

    @property
    def spec(self) -> FieldSpec:
        kind = FieldKind.RATIONALS if self.characteristic == 0 else FieldKind.PRIME
        return FieldSpec(kind=kind, characteristic=self.characteristic)

    @classmethod
    def from_spec(cls, spec: FieldSpec) -> "ScalarField":
        return cls(spec.characteristic)

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    def coerce(self, x: object) -> Scalar:
        """Bring an int, Fraction, residue or canonical string into the field."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            x = int(x)
        if self.characteristic == 0:
            if isinstance(x, Residue):
                raise FieldMismatchError("residue used over the rationals")
            if isinstance(x, int):
                return x
            if isinstance(x, Fraction):
                return _normalize(x)
            raise TypeError(f"cannot coerce {type(x).__name__} into the rationals")
        if isinstance(x, Residue):
            if x.modulus != self.characteristic:
                raise FieldMismatchError(f"Z/{x.modulus} used over Z/{self.characteristic}")
            return x
        if isinstance(x, (int, Fraction)):
            return Residue(0, self.characteristic) + x
        raise TypeError(f"cannot coerce {type(x).__name__} into Z/{self.characteristic}")

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic == 0:
            return _normalize(Fraction(a) / b)
        return self.coerce(a) / b

    def parse(self, text: str) -> Scalar:
        """Parse a canonical scalar string; non-canonical spellings are rejected."""
        if self.characteristic == 0:
            if not _RATIONAL.match(text) or text == "-0":
                raise ValueError(f"malformed rational {text!r}")
            if "/" in text:
                num, den = (int(part) for part in text.split("/"))
                if den == 1 or gcd(num, den) != 1:
                    raise ValueError(f"rational {text!r} is not in lowest terms")
                return Fraction(num, den)
            return int(text)
        if not _RESIDUE.match(text):
            raise ValueError(f"malformed residue {text!r}")
        value = int(text)
        if value >= self.characteristic:
            raise ValueError(f"residue {text!r} is not reduced mod {self.characteristic}")
        return Residue(value, self.characteristic)

    def format(self, x: Scalar) -> str:
        x = self.coerce(x)
        if isinstance(x, Residue):
            return str(x.value)
        frac = Fraction(x)
        if frac.denominator == 1:
            return str(frac.numerator)
        return f"{frac.numerator}/{frac.denominator}"


QQ = ScalarField(0)


def prime_field(p: int) -> ScalarField:
    """The prime field Z/p (validated through ``FieldSpec``)."""
    return ScalarField.from_spec(FieldSpec(kind=FieldKind.PRIME, characteristic=p))


# ========================
# Linear maps
# ========================

class LinearMap:
    """An exact matrix: ``rows`` = dim of codomain, ``cols`` = dim of domain."""

    __slots__ = ("_entries", "field")

    def __init__(self, entries: np.ndarray, field: ScalarField = QQ):
        if entries.ndim != 2:
            raise ShapeError(f"expected a 2-d grid, got {entries.ndim}-d")
        entries = np.asarray(entries, dtype=object)
        entries.setflags(write=False)
        self._entries = entries
        self.field = field

    # ---- constructors ----

    @classmethod
    def zero(cls, rows: int, cols: int, field: ScalarField = QQ) -> "LinearMap":
        return cls(np.full((rows, cols), field.zero, dtype=object), field)

    @classmethod
    def identity(cls, n: int, field: ScalarField = QQ) -> "LinearMap":
        grid = np.full((n, n), field.zero, dtype=object)
        for i in range(n):
            grid[i, i] = field.one
        return cls(grid, field)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[object]], field: ScalarField = QQ, cols: Optional[int] = None
    ) -> "LinearMap":
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        grid = np.full((len(rows), width), field.zero, dtype=object)
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ShapeError(f"row {i} has length {len(row)}, expected {width}")
            for j, value in enumerate(row):
                grid[i, j] = field.coerce(value)
        return cls(grid, field)

    @classmethod
    def from_images(
        cls,
        rows: int,
        cols: int,
        images: Iterable[Mapping[int, object]],
        field: ScalarField = QQ,
    ) -> "LinearMap":
        """Build a map from the sparse images of the domain basis vectors."""
        grid = np.full((rows, cols), field.zero, dtype=object)
        count = 0
        for j, image in enumerate(images):
            for i, value in image.items():
                grid[i, j] = grid[i, j] + field.coerce(value)
            count += 1
        if count != cols:
            raise ShapeError(f"{count} images given for a {cols}-dim domain")
        return cls(grid, field)

    @classmethod
    def from_entries(
        cls,
        rows: int,
        cols: int,
        entries: Mapping[Tuple[int, int], object],
        field: ScalarField = QQ,
    ) -> "LinearMap":
        grid = np.full((rows, cols), field.zero, dtype=object)
        for (i, j), value in entries.items():
            grid[i, j] = field.coerce(value)
        return cls(grid, field)

    @classmethod
    def column_vector(cls, values: Sequence[object], field: ScalarField = QQ) -> "LinearMap":
        return cls.from_rows([[v] for v in values], field, cols=1)

    @classmethod
    def row_vector(cls, values: Sequence[object], field: ScalarField = QQ) -> "LinearMap":
        return cls.from_rows([list(values)], field, cols=len(values))

    # ---- shape ----

    @property
    def rows(self) -> int:
        return int(self._entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self._entries.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        return self._entries[index]

    # ---- arithmetic ----

    def _same_field(self, other: "LinearMap") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} against {other.field}")

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        self._same_field(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot compose {self.shape} after {other.shape}")
        if self.cols == 0 or self.rows == 0 or other.cols == 0:
            return LinearMap.zero(self.rows, other.cols, self.field)
        return LinearMap(np.dot(self._entries, other._entries), self.field)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._same_field(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return LinearMap(self._entries + other._entries, self.field)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        self._same_field(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return LinearMap(self._entries - other._entries, self.field)

    def __neg__(self) -> "LinearMap":
        return LinearMap(-self._entries, self.field)

    def scale(self, c: object) -> "LinearMap":
        return LinearMap(self._entries * self.field.coerce(c), self.field)

    @property
    def T(self) -> "LinearMap":
        return LinearMap(self._entries.T.copy(), self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.field != other.field or self.shape != other.shape:
            return False
        return bool(np.all(self._entries == other._entries))

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self.field.format(x) for x in self._entries.flat)))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(self.field.format(x) for x in row) for row in self._entries.tolist()
        )
        return f"LinearMap({self.rows}x{self.cols}: [{body}])"

    # ---- access ----

    def column(self, j: int) -> "LinearMap":
        return LinearMap(self._entries[:, j:j + 1].copy(), self.field)

    def select_columns(self, indices: Sequence[int]) -> "LinearMap":
        grid = self._entries[:, list(indices)] if indices else np.full(
            (self.rows, 0), self.field.zero, dtype=object
        )
        return LinearMap(np.array(grid, dtype=object).reshape(self.rows, len(indices)), self.field)

    def select_rows(self, indices: Sequence[int]) -> "LinearMap":
        grid = self._entries[list(indices), :] if indices else np.full(
            (0, self.cols), self.field.zero, dtype=object
        )
        return LinearMap(np.array(grid, dtype=object).reshape(len(indices), self.cols), self.field)

    def to_lists(self) -> List[List[Scalar]]:
        return self._entries.tolist()

    def nonzero(self) -> Iterator[Tuple[int, int, Scalar]]:
        if self._entries.size == 0:
            return
        mask = np.array(self._entries != 0, dtype=bool)
        for i, j in zip(*np.nonzero(mask)):
            yield int(i), int(j), self._entries[i, j]

    def sparse_rows(self) -> List[SparseRow]:
        rows: List[SparseRow] = [dict() for _ in range(self.rows)]
        for i, j, v in self.nonzero():
            rows[i][j] = v
        return rows

    def is_zero(self) -> bool:
        return next(self.nonzero(), None) is None

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == LinearMap.identity(self.rows, self.field)

    def rank(self) -> int:
        echelon = Echelon(self.field)
        for row in self.sparse_rows():
            echelon.insert(row)
        return echelon.rank


def hstack(maps: Sequence[LinearMap], rows: Optional[int] = None, field: ScalarField = QQ) -> LinearMap:
    """Place maps side by side (a map out of a direct sum)."""
    if not maps:
        return LinearMap.zero(rows or 0, 0, field)
    return LinearMap(np.hstack([m.entries for m in maps]), maps[0].field)


def vstack(maps: Sequence[LinearMap], cols: Optional[int] = None, field: ScalarField = QQ) -> LinearMap:
    """Stack maps on top of each other (a map into a direct sum)."""
    if not maps:
        return LinearMap.zero(0, cols or 0, field)
    return LinearMap(np.vstack([m.entries for m in maps]), maps[0].field)


# ========================
# Elimination
# ========================

class Echelon:
    """Incremental reduced row echelon form over sparse rows.

    Every stored pivot row has coefficient 1 at its pivot and 0 at every
    other pivot column.
    """

    def __init__(self, field: ScalarField = QQ):
        self.field = field
        self.pivots: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, Scalar]) -> SparseRow:
        work: SparseRow = {c: v for c, v in row.items() if v}
        for col in [c for c in work if c in self.pivots]:
            coeff = work.get(col)
            if not coeff:
                continue
            for c, v in self.pivots[col].items():
                updated = work.get(c, 0) - coeff * v
                if updated:
                    work[c] = updated
                else:
                    work.pop(c, None)
        return work

    def insert(self, row: Mapping[int, Scalar]) -> bool:
        """Add a row; returns whether it raised the rank."""
        reduced = self.reduce(row)
        if not reduced:
            return False
        lead = min(reduced)
        inv = reduced[lead]
        normalized = {c: self.field.div(v, inv) for c, v in reduced.items()}
        for other in self.pivots.values():
            coeff = other.get(lead)
            if not coeff:
                continue
            for c, v in normalized.items():
                updated = other.get(c, 0) - coeff * v
                if updated:
                    other[c] = updated
                else:
                    other.pop(c, None)
        self.pivots[lead] = normalized
        return True

    def null_space(self, ncols: int) -> List[SparseRow]:
        """Canonical kernel basis: one vector per free column, in column order."""
        free = [c for c in range(ncols) if c not in self.pivots]
        basis: List[SparseRow] = []
        for f in free:
            vector: SparseRow = {f: self.field.one}
            for p, prow in self.pivots.items():
                coeff = prow.get(f)
                if coeff:
                    vector[p] = -coeff
            basis.append(vector)
        return basis


def _columns_to_map(rows: int, vectors: Sequence[Mapping[int, Scalar]], field: ScalarField) -> LinearMap:
    return LinearMap.from_images(rows, len(vectors), vectors, field)


def rank(f: LinearMap) -> int:
    return f.rank()


# ========================
# Subspaces
# ========================

@dataclass(frozen=True)
class Subspace:
    """A subspace of k^ambient given by a full-column-rank inclusion map."""

    inclusion: LinearMap

    @property
    def ambient(self) -> int:
        return self.inclusion.rows

    @property
    def dim(self) -> int:
        return self.inclusion.cols

    @property
    def field(self) -> ScalarField:
        return self.inclusion.field

    @property
    def basis(self) -> Tuple[LinearMap, ...]:
        return tuple(self.inclusion.column(j) for j in range(self.dim))

    def coordinates(self, f: LinearMap, containment: str = "subspace") -> LinearMap:
        """Corestrict ``f`` through the inclusion; raise if it leaves the subspace."""
        return corestrict(self.inclusion, f, containment)

    def contains(self, v: LinearMap) -> bool:
        return solve_linear(self.inclusion, v).solution is not None

    def annihilator(self) -> LinearMap:
        """A map whose kernel is exactly this subspace."""
        return kernel_basis(self.inclusion.T).inclusion.T

    def canonical(self) -> "Subspace":
        """The canonical basis of the span (the kernel basis of its annihilator)."""
        ann = self.annihilator()
        if ann.rows == 0:
            return Subspace(LinearMap.identity(self.ambient, self.field))
        return kernel_basis(ann)

    def same_span(self, other: "Subspace") -> bool:
        return self.ambient == other.ambient and self.canonical().inclusion == other.canonical().inclusion


def kernel_basis(f: LinearMap) -> Subspace:
    """The kernel {v : f(v) = 0} with its canonical basis."""
    echelon = Echelon(f.field)
    for row in f.sparse_rows():
        if row:
            echelon.insert(row)
    basis = echelon.null_space(f.cols)
    return Subspace(_columns_to_map(f.cols, basis, f.field))


def image_subspace(f: LinearMap) -> Subspace:
    """The column space of f, with the canonical basis of its span."""
    echelon = Echelon(f.field)
    for row in f.T.sparse_rows():
        if row:
            echelon.insert(row)
    vectors = [echelon.pivots[p] for p in sorted(echelon.pivots)]
    return Subspace(_columns_to_map(f.rows, vectors, f.field)).canonical()


def cokernel_projection(f: LinearMap) -> Tuple[int, LinearMap]:
    """A surjection onto k^q whose kernel is exactly the image of f."""
    projection = kernel_basis(f.T).inclusion.T
    return projection.rows, projection


def subspace_intersection(u: Subspace, w: Subspace) -> Subspace:
    """u ∩ w, returned in canonical form so the result does not depend on order."""
    if u.ambient != w.ambient:
        raise ShapeError(f"ambient dimensions {u.ambient} and {w.ambient} differ")
    stacked = vstack([u.annihilator(), w.annihilator()], cols=u.ambient, field=u.field)
    return kernel_basis(stacked)


def intersect_kernels(maps: Sequence[LinearMap]) -> Subspace:
    """The common kernel of several maps out of one space, in canonical form."""
    if not maps:
        raise ShapeError("no maps to intersect")
    return kernel_basis(vstack(list(maps)))


def span(vectors: Sequence[LinearMap], ambient: int, field: ScalarField = QQ) -> Subspace:
    return image_subspace(hstack(list(vectors), rows=ambient, field=field))


# ========================
# Solving
# ========================

@dataclass(frozen=True)
class LinearSolution:
    """A particular solution of A X = B together with its rank certificate."""

    solution: Optional[LinearMap]
    rank: int
    augmented_rank: int

    @property
    def solvable(self) -> bool:
        return self.solution is not None


def solve_linear(a: LinearMap, b: LinearMap) -> LinearSolution:
    """Solve A X = B exactly (free variables set to zero)."""
    if a.rows != b.rows:
        raise ShapeError(f"A has {a.rows} rows but B has {b.rows}")
    n = a.cols
    echelon = Echelon(a.field)
    a_rows = a.sparse_rows()
    b_rows = b.sparse_rows()
    for i in range(a.rows):
        row = dict(a_rows[i])
        for j, v in b_rows[i].items():
            row[n + j] = v
        if row:
            echelon.insert(row)
    coefficient_rank = sum(1 for p in echelon.pivots if p < n)
    if coefficient_rank != echelon.rank:
        return LinearSolution(None, coefficient_rank, echelon.rank)
    entries: Dict[Tuple[int, int], Scalar] = {}
    for p, prow in echelon.pivots.items():
        for c, v in prow.items():
            if c >= n:
                entries[(p, c - n)] = v
    return LinearSolution(
        LinearMap.from_entries(n, b.cols, entries, a.field), coefficient_rank, echelon.rank
    )


def solve_right_inverse(f: LinearMap) -> Optional[LinearMap]:
    """Some g with f∘g = id, or None when f is not surjective."""
    return solve_linear(f, LinearMap.identity(f.rows, f.field)).solution


def solve_left_inverse(f: LinearMap) -> Optional[LinearMap]:
    """Some g with g∘f = id, or None when f is not injective."""
    transposed = solve_linear(f.T, LinearMap.identity(f.cols, f.field)).solution
    return None if transposed is None else transposed.T


def invert(f: LinearMap) -> Optional[LinearMap]:
    if f.rows != f.cols:
        return None
    return solve_right_inverse(f)


def corestrict(inclusion: LinearMap, f: LinearMap, containment: str = "subspace") -> LinearMap:
    """The unique g with inclusion∘g = f; raises when f leaves the subspace."""
    result = solve_linear(inclusion, f)
    if result.solution is None:
        logger.debug("Corestriction failed", containment=containment, shape=f.shape)
        raise CorestrictionError(containment)
    return result.solution


def left_inverse(f: LinearMap) -> LinearMap:
    """Some g with g∘f = id; raises ShapeError when f is not injective."""
    if f.cols == 0:
        return LinearMap.zero(0, f.rows, f.field)
    if f.rows == f.cols and f.is_identity():
        return f
    g = solve_left_inverse(f)
    if g is None:
        raise ShapeError(f"a map of shape {f.shape} and rank {f.rank()} has no left inverse")
    return g


def corestrict_tensor(
    f: LinearMap,
    g: LinearMap,
    target: LinearMap,
    containment: str = "subspace",
    inverses: Optional[Tuple[LinearMap, LinearMap]] = None,
) -> LinearMap:
    """The unique h with (f⊗g)∘h = target for injective f and g, solved one factor at a time."""
    f_inv, g_inv = inverses or (left_inverse(f), left_inverse(g))
    h = tensor_apply(f_inv, g_inv, target)
    if tensor_apply(f, g, h) != target:
        logger.debug("Corestriction failed", containment=containment, shape=target.shape)
        raise CorestrictionError(containment)
    return h


# ========================
# Tensor calculus
# ========================

def tensor_map(*maps: LinearMap) -> LinearMap:
    """Kronecker product in the row-major basis order."""
    if not maps:
        return LinearMap.identity(1)

    def pair(f: LinearMap, g: LinearMap) -> LinearMap:
        f._same_field(g)
        outer = np.multiply.outer(f.entries, g.entries) if f.entries.size and g.entries.size else None
        rows, cols = f.rows * g.rows, f.cols * g.cols
        if outer is None:
            return LinearMap.zero(rows, cols, f.field)
        return LinearMap(outer.transpose(0, 2, 1, 3).reshape(rows, cols), f.field)

    return reduce(pair, maps)


def _sparse_dot(f: LinearMap, grid: np.ndarray) -> np.ndarray:
    out = np.full((f.rows, grid.shape[1]), f.field.zero, dtype=object)
    for i, j, v in f.nonzero():
        out[i] = out[i] + grid[j] * v
    return out


def tensor_apply(f: LinearMap, g: LinearMap, x: LinearMap) -> LinearMap:
    """(f⊗g)∘x without materializing f⊗g; only the nonzero entries of f and g are visited."""
    f._same_field(g)
    f._same_field(x)
    if x.rows != f.cols * g.cols:
        raise ShapeError(f"cannot apply {f.shape}⊗{g.shape} to {x.shape}")
    n = x.cols
    if n == 0 or f.rows * g.rows == 0:
        return LinearMap.zero(f.rows * g.rows, n, f.field)
    first = _sparse_dot(f, x.entries.reshape(f.cols, g.cols * n))
    legs = first.reshape(f.rows, g.cols, n).transpose(1, 0, 2).reshape(g.cols, f.rows * n)
    second = _sparse_dot(g, legs).reshape(g.rows, f.rows, n).transpose(1, 0, 2)
    return LinearMap(second.reshape(f.rows * g.rows, n), f.field)


def permute_rows(v: LinearMap, dims: Sequence[int], order: Sequence[int]) -> LinearMap:
    """permute_legs(dims, order) ∘ v, computed by reindexing the rows of v."""
    if sorted(order) != list(range(len(dims))):
        raise ShapeError(f"{order} is not a permutation of {len(dims)} legs")
    if int(np.prod(dims)) != v.rows:
        raise ShapeError(f"legs {tuple(dims)} do not multiply to {v.rows} rows")
    grid = v.entries.reshape(*dims, v.cols).transpose(*order, len(dims)).reshape(v.rows, v.cols)
    return LinearMap(grid.copy(), v.field)


def identity(n: int, field: ScalarField = QQ) -> LinearMap:
    return LinearMap.identity(n, field)


def permute_legs(dims: Sequence[int], order: Sequence[int], field: ScalarField = QQ) -> LinearMap:
    """The map V_0⊗...⊗V_{r-1} → V_{order[0]}⊗...⊗V_{order[r-1]}."""
    if sorted(order) != list(range(len(dims))):
        raise ShapeError(f"{order} is not a permutation of {len(dims)} legs")
    total = int(np.prod(dims)) if dims else 1
    source = np.arange(total).reshape(tuple(dims)).transpose(tuple(order)).reshape(-1)
    return LinearMap.from_images(
        total, total, _inverse_images(source), field
    ) if total else LinearMap.zero(0, 0, field)


def _inverse_images(source: np.ndarray) -> List[Dict[int, int]]:
    images: List[Dict[int, int]] = [dict() for _ in range(len(source))]
    for k, old in enumerate(source):
        images[int(old)] = {k: 1}
    return images


def swap(m: int, n: int, field: ScalarField = QQ) -> LinearMap:
    """The symmetry M⊗N → N⊗M."""
    return permute_legs((m, n), (1, 0), field)


# ========================
# Matrix-valued unknowns
# ========================

@dataclass(frozen=True)
class Sandwich:
    """The term coefficient · left ∘ X ∘ right, linear in the unknown X."""

    left: LinearMap
    right: LinearMap
    coefficient: Scalar = 1


def left_identity_terms(
    left: LinearMap, right: LinearMap, width: int, rows: int, cols: int, coefficient: Scalar = 1
) -> List[Sandwich]:
    """Expand left ∘ (id_width ⊗ X) ∘ right into sandwich terms."""
    return [
        Sandwich(
            left.select_columns(range(i * rows, (i + 1) * rows)),
            right.select_rows(range(i * cols, (i + 1) * cols)),
            coefficient,
        )
        for i in range(width)
    ]


def right_identity_terms(
    left: LinearMap, right: LinearMap, width: int, rows: int, cols: int, coefficient: Scalar = 1
) -> List[Sandwich]:
    """Expand left ∘ (X ⊗ id_width) ∘ right into sandwich terms."""
    return [
        Sandwich(
            left.select_columns([r * width + j for r in range(rows)]),
            right.select_rows([c * width + j for c in range(cols)]),
            coefficient,
        )
        for j in range(width)
    ]


def _sandwich_rows(
    rows: int, cols: int, equations: Sequence[Sequence[Sandwich]], field: ScalarField
) -> Tuple[Dict[int, SparseRow], List[int]]:
    """Row-major vectorization: vec(L X R) = (L ⊗ Rᵀ) vec(X)."""
    system: Dict[int, SparseRow] = {}
    offsets: List[int] = []
    offset = 0
    for terms in equations:
        offsets.append(offset)
        height = width = None
        for term in terms:
            if term.left.cols != rows or term.right.rows != cols:
                raise ShapeError(
                    f"term {term.left.shape}·X·{term.right.shape} does not fit X of {rows}x{cols}"
                )
            if height is None:
                height, width = term.left.rows, term.right.cols
            elif (height, width) != (term.left.rows, term.right.cols):
                raise ShapeError("terms of one equation have different shapes")
            coeff = field.coerce(term.coefficient)
            right_entries = list(term.right.nonzero())
            for i, a, lv in term.left.nonzero():
                for b, j, rv in right_entries:
                    key = offset + i * width + j
                    row = system.setdefault(key, {})
                    col = a * cols + b
                    updated = row.get(col, 0) + coeff * lv * rv
                    if updated:
                        row[col] = updated
                    else:
                        row.pop(col, None)
        offset += (height or 0) * (width or 0)
    return system, offsets


def _reshape(vector: Mapping[int, Scalar], rows: int, cols: int, field: ScalarField) -> LinearMap:
    return LinearMap.from_entries(
        rows, cols, {(k // cols, k % cols): v for k, v in vector.items()}, field
    )


def map_space(
    rows: int, cols: int, equations: Sequence[Sequence[Sandwich]], field: ScalarField = QQ
) -> List[LinearMap]:
    """A basis of all X (rows×cols) satisfying Σ terms = 0 for every equation."""
    system, _ = _sandwich_rows(rows, cols, equations, field)
    echelon = Echelon(field)
    for row in system.values():
        if row:
            echelon.insert(row)
    return [_reshape(v, rows, cols, field) for v in echelon.null_space(rows * cols)]


def map_equation_system(
    rows: int,
    cols: int,
    equations: Sequence[Tuple[Sequence[Sandwich], LinearMap]],
    field: ScalarField = QQ,
) -> Tuple[LinearMap, LinearMap]:
    """The stacked system A·vec(X) = vec(targets) as two explicit matrices."""
    system, offsets = _sandwich_rows(rows, cols, [terms for terms, _ in equations], field)
    height = offsets[-1] + equations[-1][1].rows * equations[-1][1].cols if equations else 0
    coefficients = LinearMap.from_entries(
        height,
        rows * cols,
        {(r, c): v for r, row in system.items() for c, v in row.items()},
        field,
    )
    target = LinearMap.from_entries(
        height,
        1,
        {
            (offset + i * t.cols + j, 0): v
            for (_, t), offset in zip(equations, offsets)
            for i, j, v in t.nonzero()
        },
        field,
    )
    return coefficients, target


def unvectorize(vector: LinearMap, rows: int, cols: int) -> LinearMap:
    """Inverse of the row-major vectorization used by the map solvers."""
    if vector.shape != (rows * cols, 1):
        raise ShapeError(f"vector of shape {vector.shape} is not vec of a {rows}x{cols} map")
    return LinearMap(vector.entries.reshape(rows, cols).copy(), vector.field)


def solve_map_equations(
    rows: int,
    cols: int,
    equations: Sequence[Tuple[Sequence[Sandwich], LinearMap]],
    field: ScalarField = QQ,
) -> Optional[LinearMap]:
    """Some X with Σ terms = target for every (terms, target) pair, or None."""
    system, offsets = _sandwich_rows(rows, cols, [terms for terms, _ in equations], field)
    n = rows * cols
    for (terms, target), offset in zip(equations, offsets):
        for i, j, v in target.nonzero():
            system.setdefault(offset + i * target.cols + j, {})[n] = v
    echelon = Echelon(field)
    for row in system.values():
        if row:
            echelon.insert(row)
    if n in echelon.pivots:
        return None
    vector = {p: prow[n] for p, prow in echelon.pivots.items() if n in prow}
    return _reshape(vector, rows, cols, field)


def combine(basis: Sequence[LinearMap], coefficients: Sequence[object]) -> LinearMap:
    """Σ c_k · basis_k."""
    if not basis:
        raise ShapeError("empty basis")
    field = basis[0].field
    total = LinearMap.zero(basis[0].rows, basis[0].cols, field)
    for c, f in zip(coefficients, basis):
        total = total + f.scale(c)
    return total


def sample_combinations(
    basis: Sequence[LinearMap], count: int, rng: np.random.Generator
) -> List[LinearMap]:
    """Random small-integer combinations of a basis (deterministic for a seeded rng)."""
    if not basis:
        return []
    return [
        combine(basis, [int(c) for c in rng.integers(-2, 3, size=len(basis))])
        for _ in range(count)
    ]


# ========================
# Checks
# ========================

def identity_check(name: str, lhs: LinearMap, rhs: LinearMap) -> CheckResult:
    """Exact equality of two maps, with the first differing entry as witness."""
    if lhs.shape != rhs.shape:
        return CheckResult(name=name, passed=False, witness=f"shape {lhs.shape} != {rhs.shape}")
    if lhs == rhs:
        return CheckResult(name=name, passed=True)
    diff = lhs - rhs
    i, j, _ = next(diff.nonzero())
    witness = (
        f"entry ({i}, {j}): {lhs.field.format(lhs[i, j])} != {rhs.field.format(rhs[i, j])}"
    )
    return CheckResult(name=name, passed=False, witness=witness)
