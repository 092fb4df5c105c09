"""
Canonical JSON structure files.

Implements:
- Byte-exact serialization: sorted keys, compact separators, lowest-terms scalars,
  a trailing newline
- Content hashes of base bialgebras, referenced by every dependent structure
- ``parse`` with diagnostics naming the violated rule and a JSON location
- Loading parsed files back into domain objects
"""

import hashlib
import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from ..core.config import settings
from ..core.errors import NotAMonoidError, ParseError, ShapeError
from ..core.logging import get_logger
from ..models.schemas import MatrixPayload, StructureFile, StructureKind
from .bialgebra import BialgebraFD, FiniteMonoid, bialgebra_from_maps
from .comodule import BicomoduleFD, LeftComoduleFD, RightComoduleFD, cotensor
from .exact_kernel import LinearMap, ScalarField
from .trimodule import HopfTrimoduleFD, trimodule_from_maps
from .trimodule_algebra import (
    ContramoduleFD,
    TrimoduleAlgebraFD,
    TrimoduleModuleFD,
    module_from_act,
)

logger = get_logger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)

Structure = Union[
    BialgebraFD,
    LeftComoduleFD,
    RightComoduleFD,
    BicomoduleFD,
    HopfTrimoduleFD,
    TrimoduleAlgebraFD,
    TrimoduleModuleFD,
    ContramoduleFD,
]

# Rules reported by ParseError
MALFORMED_SYNTAX = "malformed-syntax"
SCHEMA = "schema"
UNKNOWN_KIND = "unknown-kind"
DANGLING_BASE_REF = "dangling-base-ref"
NON_CANONICAL_SCALAR = "non-canonical-scalar"


def canonical_bytes(document: Mapping[str, Any]) -> bytes:
    text = json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def content_hash(payload: Mapping[str, Any]) -> str:
    """sha256 of the canonical bytes of a payload."""
    return hashlib.sha256(canonical_bytes(payload)).hexdigest()


# ========================
# Encoding
# ========================

def encode_matrix(f: LinearMap) -> Dict[str, Any]:
    entries = [[f.field.format(x) for x in row] for row in f.to_lists()]
    return MatrixPayload(rows=f.rows, cols=f.cols, entries=entries).model_dump()


def encode_monoid(monoid: FiniteMonoid) -> Dict[str, Any]:
    return {
        "name": monoid.name,
        "elements": list(monoid.elements),
        "table": [list(row) for row in monoid.table],
    }


def encode_bialgebra(b: BialgebraFD) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "name": b.name,
        "labels": list(b.labels),
        "mul": encode_matrix(b.mul),
        "unit": encode_matrix(b.unit),
        "comul": encode_matrix(b.comul),
        "counit": encode_matrix(b.counit),
    }
    if b.monoid is not None:
        payload["monoid"] = encode_monoid(b.monoid)
    return payload


def encode_comodule(m: Union[LeftComoduleFD, RightComoduleFD]) -> Dict[str, Any]:
    return {"name": m.name, "dim": m.dim, "coaction": encode_matrix(m.coaction)}


def encode_bicomodule(x: BicomoduleFD) -> Dict[str, Any]:
    return {"name": x.name, "dim": x.dim, "left": encode_matrix(x.left), "right": encode_matrix(x.right)}


def encode_trimodule(x: HopfTrimoduleFD) -> Dict[str, Any]:
    payload = encode_bicomodule(x.bicomodule)
    payload["action"] = encode_matrix(x.action)
    return payload


def encode_algebra(a: TrimoduleAlgebraFD) -> Dict[str, Any]:
    return {
        "name": a.name,
        "carrier": encode_trimodule(a.carrier),
        "square": {"inclusion": encode_matrix(a.square.inclusion)},
        "mul": encode_matrix(a.mul),
        "unit": encode_matrix(a.unit),
    }


def encode_module(m: TrimoduleModuleFD) -> Dict[str, Any]:
    payload = {
        "algebra": encode_algebra(m.algebra),
        "comodule": encode_comodule(m.comodule),
        "act": encode_matrix(m.act),
    }
    if m.provenance is not None:
        payload["provenance"] = encode_comodule(m.provenance)
    return payload


def encode_contramodule(c: ContramoduleFD) -> Dict[str, Any]:
    return {
        "algebra": encode_algebra(c.algebra),
        "comodule": encode_comodule(c.comodule),
        "coact": encode_matrix(c.coact),
    }


_ENCODERS = [
    (BialgebraFD, StructureKind.BIALGEBRA, encode_bialgebra),
    (LeftComoduleFD, StructureKind.COMODULE_LEFT, encode_comodule),
    (RightComoduleFD, StructureKind.COMODULE_RIGHT, encode_comodule),
    (BicomoduleFD, StructureKind.BICOMODULE, encode_bicomodule),
    (HopfTrimoduleFD, StructureKind.TRIMODULE, encode_trimodule),
    (TrimoduleAlgebraFD, StructureKind.TRIMODULE_ALGEBRA, encode_algebra),
    (TrimoduleModuleFD, StructureKind.MODULE, encode_module),
    (ContramoduleFD, StructureKind.CONTRAMODULE, encode_contramodule),
]


def _base_of(obj: Structure) -> BialgebraFD:
    if isinstance(obj, ContramoduleFD):
        return obj.algebra.base
    return obj.base


def to_document(obj: Structure) -> StructureFile:
    """Wrap a structure with its field, kind and (for dependent kinds) base."""
    for cls, kind, encode in _ENCODERS:
        if isinstance(obj, cls):
            break
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    payload = encode(obj)
    if kind == StructureKind.BIALGEBRA:
        return StructureFile(
            schema_version=settings.schema_version, field=obj.field.spec, kind=kind, payload=payload
        )
    base = encode_bialgebra(_base_of(obj))
    return StructureFile(
        schema_version=settings.schema_version,
        field=_base_of(obj).field.spec,
        kind=kind,
        payload=payload,
        base_ref=content_hash(base),
        base=base,
    )


def serialize(obj: Union[Structure, StructureFile]) -> bytes:
    document = obj if isinstance(obj, StructureFile) else to_document(obj)
    return canonical_bytes(document.model_dump(by_alias=True, mode="json", exclude_none=True))


def write_structure(path: Path, obj: Structure) -> Path:
    data = serialize(obj)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(data)
    logger.info("Structure written", path=str(path), bytes=len(data))
    return path


# ========================
# Decoding
# ========================

class _Decoder:
    """Builds domain objects from payload dicts, reporting JSON locations."""

    def __init__(self, field: ScalarField, base: Optional[BialgebraFD] = None):
        self.field = field
        self.base = base

    def get(self, data: Any, key: str, location: str) -> Any:
        if not isinstance(data, dict):
            raise ParseError(SCHEMA, location, "expected an object")
        if key not in data:
            raise ParseError(SCHEMA, f"{location}.{key}", "missing")
        return data[key]

    def integer(self, data: Any, key: str, location: str) -> int:
        value = self.get(data, key, location)
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ParseError(SCHEMA, f"{location}.{key}", "expected a nonnegative integer")
        return value

    def string(self, data: Any, key: str, location: str) -> str:
        value = self.get(data, key, location)
        if not isinstance(value, str):
            raise ParseError(SCHEMA, f"{location}.{key}", "expected a string")
        return value

    def matrix(self, data: Any, key: str, location: str) -> LinearMap:
        where = f"{location}.{key}"
        try:
            payload = MatrixPayload.model_validate(self.get(data, key, location))
        except ValidationError as exc:
            raise ParseError(SCHEMA, where, exc.errors()[0]["msg"]) from exc
        rows: List[List[Any]] = []
        for i, row in enumerate(payload.entries):
            parsed = []
            for j, text in enumerate(row):
                try:
                    parsed.append(self.field.parse(text))
                except ValueError as exc:
                    raise ParseError(NON_CANONICAL_SCALAR, f"{where}.entries[{i}][{j}]", str(exc)) from exc
            rows.append(parsed)
        return LinearMap.from_rows(rows, self.field, cols=payload.cols)

    def monoid(self, data: Any, location: str) -> FiniteMonoid:
        elements = self.get(data, "elements", location)
        table = self.get(data, "table", location)
        if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
            raise ParseError(SCHEMA, f"{location}.elements", "expected a list of names")
        if not isinstance(table, list) or not all(
            isinstance(row, list) and all(isinstance(v, int) for v in row) for row in table
        ):
            raise ParseError(SCHEMA, f"{location}.table", "expected a table of element indices")
        try:
            return FiniteMonoid(
                tuple(elements), tuple(tuple(row) for row in table), self.string(data, "name", location)
            )
        except NotAMonoidError as exc:
            raise ParseError(SCHEMA, f"{location}.table", str(exc)) from exc

    def bialgebra(self, data: Any, location: str) -> BialgebraFD:
        labels = self.get(data, "labels", location)
        if not isinstance(labels, list) or not all(isinstance(v, str) for v in labels):
            raise ParseError(SCHEMA, f"{location}.labels", "expected a list of strings")
        monoid = None
        if isinstance(data, dict) and "monoid" in data:
            monoid = self.monoid(data["monoid"], f"{location}.monoid")
        return bialgebra_from_maps(
            self.matrix(data, "mul", location),
            self.matrix(data, "unit", location),
            self.matrix(data, "comul", location),
            self.matrix(data, "counit", location),
            self.string(data, "name", location),
            labels,
            monoid,
        )

    def left_comodule(self, data: Any, location: str) -> LeftComoduleFD:
        return LeftComoduleFD(
            self.base,
            self.integer(data, "dim", location),
            self.matrix(data, "coaction", location),
            self.string(data, "name", location),
        )

    def right_comodule(self, data: Any, location: str) -> RightComoduleFD:
        return RightComoduleFD(
            self.base,
            self.integer(data, "dim", location),
            self.matrix(data, "coaction", location),
            self.string(data, "name", location),
        )

    def bicomodule(self, data: Any, location: str) -> BicomoduleFD:
        return BicomoduleFD(
            self.base,
            self.integer(data, "dim", location),
            self.matrix(data, "left", location),
            self.matrix(data, "right", location),
            self.string(data, "name", location),
        )

    def trimodule(self, data: Any, location: str) -> HopfTrimoduleFD:
        bicomodule = self.bicomodule(data, location)
        return trimodule_from_maps(
            self.base,
            bicomodule.left,
            bicomodule.right,
            self.matrix(data, "action", location),
            bicomodule.name,
        )

    def algebra(self, data: Any, location: str) -> TrimoduleAlgebraFD:
        carrier = self.trimodule(self.get(data, "carrier", location), f"{location}.carrier")
        declared = self.matrix(self.get(data, "square", location), "inclusion", f"{location}.square")
        square = cotensor(carrier, carrier)
        if declared != square.inclusion:
            raise ParseError(
                SCHEMA, f"{location}.square.inclusion", "does not match the cotensor square of the carrier"
            )
        return TrimoduleAlgebraFD(
            carrier,
            square,
            self.matrix(data, "mul", location),
            self.matrix(data, "unit", location),
            self.string(data, "name", location),
        )

    def module(self, data: Any, location: str) -> TrimoduleModuleFD:
        algebra = self.algebra(self.get(data, "algebra", location), f"{location}.algebra")
        comodule = self.left_comodule(self.get(data, "comodule", location), f"{location}.comodule")
        provenance = None
        if isinstance(data, dict) and "provenance" in data:
            provenance = self.left_comodule(data["provenance"], f"{location}.provenance")
        return module_from_act(algebra, comodule, self.matrix(data, "act", location), provenance)

    def contramodule(self, data: Any, location: str) -> ContramoduleFD:
        algebra = self.algebra(self.get(data, "algebra", location), f"{location}.algebra")
        comodule = self.left_comodule(self.get(data, "comodule", location), f"{location}.comodule")
        return ContramoduleFD(algebra, comodule, self.matrix(data, "coact", location))


_DECODERS = {
    StructureKind.BIALGEBRA: _Decoder.bialgebra,
    StructureKind.COMODULE_LEFT: _Decoder.left_comodule,
    StructureKind.COMODULE_RIGHT: _Decoder.right_comodule,
    StructureKind.BICOMODULE: _Decoder.bicomodule,
    StructureKind.TRIMODULE: _Decoder.trimodule,
    StructureKind.TRIMODULE_ALGEBRA: _Decoder.algebra,
    StructureKind.MODULE: _Decoder.module,
    StructureKind.CONTRAMODULE: _Decoder.contramodule,
}


def _location(loc: tuple) -> str:
    aliases = {"schema_version": "schema-version", "base_ref": "base-ref"}
    parts = ["$"]
    for item in loc:
        parts.append(f"[{item}]" if isinstance(item, int) else f".{aliases.get(item, item)}")
    return "".join(parts)


def validate_input(model: Type[ModelT], raw: Any, source: str) -> ModelT:
    """Validate a JSON input against ``model``, reporting the first error as a ParseError."""
    try:
        return model.model_validate(raw)
    except ValidationError as exc:
        error = exc.errors()[0]
        raise ParseError(SCHEMA, f"{source}: {_location(error['loc'])}", error["msg"]) from exc


def load(document: StructureFile) -> Structure:
    """Build the domain object a validated document describes."""
    field = ScalarField.from_spec(document.field)
    decoder = _Decoder(field)
    try:
        if document.kind != StructureKind.BIALGEBRA:
            decoder.base = decoder.bialgebra(document.base, "$.base")
        return _DECODERS[document.kind](decoder, document.payload, "$.payload")
    except ShapeError as exc:
        raise ParseError(SCHEMA, "$.payload", str(exc)) from exc


def parse(data: bytes) -> StructureFile:
    """Validate a structure file; raises ``ParseError`` at the first violated rule."""
    try:
        raw = json.loads(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise ParseError(MALFORMED_SYNTAX, f"byte {exc.start}", exc.reason) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(MALFORMED_SYNTAX, f"line {exc.lineno} column {exc.colno}", exc.msg) from exc
    if not isinstance(raw, dict):
        raise ParseError(SCHEMA, "$", "expected an object")
    kind = raw.get("kind")
    if kind is not None and kind not in {k.value for k in StructureKind}:
        raise ParseError(UNKNOWN_KIND, "$.kind", repr(kind))
    try:
        document = StructureFile.model_validate(raw)
    except ValidationError as exc:
        error = exc.errors()[0]
        raise ParseError(SCHEMA, _location(error["loc"]), error["msg"]) from exc
    if document.schema_version != settings.schema_version:
        raise ParseError(SCHEMA, "$.schema-version", f"expected {settings.schema_version!r}")

    if document.kind == StructureKind.BIALGEBRA:
        if document.base is not None or document.base_ref is not None:
            raise ParseError(SCHEMA, "$.base", "a bialgebra has no base")
    else:
        if document.base is None:
            raise ParseError(DANGLING_BASE_REF, "$.base", "missing base bialgebra")
        if document.base_ref is None:
            raise ParseError(DANGLING_BASE_REF, "$.base-ref", "missing")
        actual = content_hash(document.base)
        if actual != document.base_ref:
            raise ParseError(DANGLING_BASE_REF, "$.base-ref", f"base hashes to {actual}")
    load(document)
    logger.debug("Parsed structure file", kind=document.kind.value)
    return document


def read_structure(data: bytes) -> Structure:
    return load(parse(data))
