"""
Pydantic models for reports and structure files.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


# ========================
# Enums
# ========================

class FieldKind(str, Enum):
    """Ground field kind."""
    RATIONALS = "rationals"
    PRIME = "prime"


class StructureKind(str, Enum):
    """Kinds of structure a file can hold."""
    BIALGEBRA = "bialgebra"
    COMODULE_LEFT = "comodule-left"
    COMODULE_RIGHT = "comodule-right"
    BICOMODULE = "bicomodule"
    TRIMODULE = "trimodule"
    TRIMODULE_ALGEBRA = "trimodule-algebra"
    MODULE = "module"
    CONTRAMODULE = "contramodule"


class OutputFormat(str, Enum):
    """Report output format."""
    JSON = "json"
    TEXT = "text"


# ========================
# Field Models
# ========================

class FieldSpec(BaseModel):
    """The ground field: the rationals or a prime field."""
    model_config = ConfigDict(frozen=True)

    kind: FieldKind = Field(FieldKind.RATIONALS, description="Field kind")
    characteristic: int = Field(0, ge=0, description="0 or a prime p")

    @field_validator("characteristic")
    @classmethod
    def validate_characteristic(cls, v: int) -> int:
        """Characteristic must be 0 or prime."""
        if v == 0:
            return v
        if v < 2 or any(v % d == 0 for d in range(2, int(v ** 0.5) + 1)):
            raise ValueError(f"characteristic {v} is neither 0 nor prime")
        return v

    @model_validator(mode="after")
    def validate_kind(self) -> "FieldSpec":
        if (self.kind == FieldKind.RATIONALS) != (self.characteristic == 0):
            raise ValueError("rationals have characteristic 0, prime fields a prime")
        return self


# ========================
# Report Models
# ========================

class CheckResult(BaseModel):
    """One named identity check."""
    name: str = Field(..., description="Stable check name")
    passed: bool = Field(..., description="Whether the identity holds exactly")
    witness: Optional[str] = Field(None, description="First violating entry or reason")


class Report(BaseModel):
    """A list of named checks about one subject."""
    subject: str = Field(..., description="What was checked")
    checks: List[CheckResult] = Field(default_factory=list, description="Named checks")
    data: Dict[str, Any] = Field(default_factory=dict, description="Computed values")

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def check(self, name: str) -> CheckResult:
        """Look up a check by name."""
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)

    def add(self, name: str, passed: bool, witness: Optional[str] = None) -> "Report":
        self.checks.append(CheckResult(name=name, passed=passed, witness=witness))
        return self

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        """Append the checks of another report, optionally namespaced."""
        for item in other.checks:
            name = f"{prefix}{item.name}" if prefix else item.name
            self.checks.append(item.model_copy(update={"name": name}))
        return self

    def render_text(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for item in self.checks:
            mark = "ok  " if item.passed else "FAIL"
            line = f"  [{mark}] {item.name}"
            if item.witness and not item.passed:
                line += f"  ({item.witness})"
            lines.append(line)
        for key in sorted(self.data):
            lines.append(f"  {key} = {self.data[key]}")
        return "\n".join(lines)


class CriterionResult(BaseModel):
    """Outcome of one acceptance criterion."""
    identifier: str = Field(..., description="Stable criterion identifier")
    title: str = Field(..., description="Short description")
    report: Report
    seconds: float = Field(0.0, ge=0, description="Wall time")

    @property
    def passed(self) -> bool:
        return self.report.passed


class SuiteReport(BaseModel):
    """The full acceptance report."""
    criteria: List[CriterionResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.criteria)

    def render_text(self) -> str:
        blocks = []
        for item in self.criteria:
            blocks.append(f"{item.identifier} {item.title}\n{item.report.render_text()}")
        blocks.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n\n".join(blocks)


# ========================
# Structure File Models
# ========================

class MatrixPayload(BaseModel):
    """A dense row-major matrix of canonical scalar strings."""
    rows: int = Field(..., ge=0)
    cols: int = Field(..., ge=0)
    entries: List[List[str]] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_grid(self) -> "MatrixPayload":
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} grid")
        return self


class StructureFile(BaseModel):
    """A serialized structure with its field, kind and base reference."""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(..., alias="schema-version")
    field: FieldSpec
    kind: StructureKind
    payload: Dict[str, Any] = Field(..., description="Structure constants")
    base_ref: Optional[str] = Field(None, alias="base-ref", description="Content hash of the base")
    base: Optional[Dict[str, Any]] = Field(None, description="Embedded base bialgebra payload")


# ========================
# Reconstruction Inputs
# ========================

class MonoidDescription(BaseModel):
    """A finite monoid given by element names and its multiplication table."""
    elements: List[str] = Field(..., min_length=1, description="Element names in table order")
    table: List[List[str]] = Field(..., description="table[i][j] names elements[i]·elements[j]")
    name: str = Field("S", description="Monoid name")

    @model_validator(mode="after")
    def validate_table(self) -> "MonoidDescription":
        n = len(self.elements)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError(f"table is not {n}x{n}")
        return self


class CharacterDescription(BaseModel):
    """A {0, 1}-valued function on the monoid elements."""
    eps: Dict[str, int] = Field(..., description="eps(z) for every element z")
