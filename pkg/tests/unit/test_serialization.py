"""Unit tests for canonical structure files."""

import json
from pathlib import Path

import pytest

from trimodule_lab.core.errors import ParseError
from trimodule_lab.models.schemas import StructureKind
from trimodule_lab.services.bialgebra import sweedler_h4
from trimodule_lab.services.comodule import regular_bicomodule, regular_right_comodule, trivial_comodule
from trimodule_lab.services.exact_kernel import prime_field
from trimodule_lab.services.fixtures import pointed_example_algebra
from trimodule_lab.services.serialization import (
    DANGLING_BASE_REF,
    MALFORMED_SYNTAX,
    NON_CANONICAL_SCALAR,
    SCHEMA,
    UNKNOWN_KIND,
    canonical_bytes,
    content_hash,
    encode_bialgebra,
    parse,
    read_structure,
    serialize,
    write_structure,
)
from trimodule_lab.services.trimodule import regular_trimodule
from trimodule_lab.services.trimodule_algebra import b_dot_b, free_contramodule, free_module, unit_algebra

GOLDEN = Path(__file__).resolve().parent.parent / "golden"
KS_BASE_REF = "be1a3d2faa1cb605b00b2a40d1705bea3bf6fdc4cbbea5343acfdf0ef9795b32"


def _document(obj) -> dict:
    return json.loads(serialize(obj).decode("utf-8"))


def _rule(data: bytes) -> ParseError:
    with pytest.raises(ParseError) as info:
        read_structure(data)
    return info.value


class TestCanonicalBytes:
    """Byte-exact output."""

    def test_sorted_compact_with_newline(self):
        """Keys are sorted, separators compact, and a newline terminates."""
        assert canonical_bytes({"b": 1, "a": [1, 2]}) == b'{"a":[1,2],"b":1}\n'

    def test_non_ascii_kept(self):
        """Names are written as UTF-8, not escaped."""
        assert canonical_bytes({"name": "A□M"}) == '{"name":"A□M"}\n'.encode("utf-8")

    def test_golden_pointed_algebra(self):
        """The pointed reconstruction serializes to the stored bytes."""
        assert serialize(pointed_example_algebra()) == (GOLDEN / "pointed_ks.json").read_bytes()

    def test_base_hash(self, ks):
        """base-ref is the sha256 of the canonical base payload."""
        assert content_hash(encode_bialgebra(ks)) == KS_BASE_REF
        assert _document(trivial_comodule(ks))["base-ref"] == KS_BASE_REF

    def test_bialgebra_has_no_base(self, h4):
        """Only dependent kinds embed a base."""
        document = _document(h4)
        assert "base" not in document and "base-ref" not in document
        assert document["kind"] == StructureKind.BIALGEBRA.value
        assert document["field"] == {"characteristic": 0, "kind": "rationals"}

    def test_deterministic(self, z2):
        """Two builds of the same algebra give identical bytes."""
        assert serialize(b_dot_b(z2)) == serialize(b_dot_b(z2))


class TestReadBack:
    """Files load back into equal structures."""

    @pytest.mark.parametrize(
        "build",
        [
            lambda b: b,
            trivial_comodule,
            regular_right_comodule,
            regular_bicomodule,
            regular_trimodule,
            unit_algebra,
            lambda b: free_module(unit_algebra(b), trivial_comodule(b)),
            lambda b: free_contramodule(unit_algebra(b), trivial_comodule(b)),
        ],
        ids=["bialgebra", "comodule-left", "comodule-right", "bicomodule", "trimodule", "algebra", "module", "contra"],
    )
    def test_reserialize(self, z2, build):
        """read then serialize reproduces the bytes."""
        data = serialize(build(z2))
        assert serialize(read_structure(data)) == data

    def test_prime_field(self):
        """H4 over Z/3 keeps its field and its residues."""
        h = sweedler_h4(prime_field(3))
        data = serialize(h)
        assert _document(h)["field"] == {"characteristic": 3, "kind": "prime"}
        loaded = read_structure(data)
        assert loaded.field.characteristic == 3
        assert serialize(loaded) == data

    def test_module_provenance(self, z2):
        """Free modules keep the comodule they are free on."""
        m = free_module(unit_algebra(z2), trivial_comodule(z2))
        assert read_structure(serialize(m)).provenance is not None

    def test_write_structure(self, tmp_path, z2):
        """Parent directories are created and the bytes are canonical."""
        target = write_structure(tmp_path / "nested" / "z2.json", z2)
        assert target.read_bytes() == serialize(z2)
        assert parse(target.read_bytes()).kind == StructureKind.BIALGEBRA


class TestParseErrors:
    """Each rule is reported with a JSON location."""

    def test_malformed_syntax(self):
        """Truncated JSON."""
        error = _rule(b'{"kind":')
        assert error.rule == MALFORMED_SYNTAX
        assert error.location.startswith("line 1")

    def test_not_utf8(self):
        """Invalid bytes are a syntax error too."""
        assert _rule(b"\xff\xfe").rule == MALFORMED_SYNTAX

    def test_not_an_object(self):
        """The top level must be an object."""
        error = _rule(b"[]\n")
        assert (error.rule, error.location) == (SCHEMA, "$")

    def test_unknown_kind(self, z2):
        """Kinds outside the closed set."""
        document = _document(z2)
        document["kind"] = "hopf-quasigroup"
        error = _rule(canonical_bytes(document))
        assert (error.rule, error.location) == (UNKNOWN_KIND, "$.kind")

    def test_missing_schema_version(self, z2):
        """The version field is required."""
        document = _document(z2)
        del document["schema-version"]
        error = _rule(canonical_bytes(document))
        assert (error.rule, error.location) == (SCHEMA, "$.schema-version")

    def test_wrong_schema_version(self, z2):
        """Only the current version is accepted."""
        document = _document(z2)
        document["schema-version"] = "2"
        assert _rule(canonical_bytes(document)).location == "$.schema-version"

    def test_bad_characteristic(self, z2):
        """Composite characteristics are rejected."""
        document = _document(z2)
        document["field"] = {"kind": "prime", "characteristic": 4}
        error = _rule(canonical_bytes(document))
        assert error.rule == SCHEMA
        assert error.location.startswith("$.field")

    def test_dangling_base_ref(self, z2):
        """A base that does not hash to base-ref."""
        document = _document(trivial_comodule(z2))
        document["base"]["name"] = "k[Z/3]"
        error = _rule(canonical_bytes(document))
        assert (error.rule, error.location) == (DANGLING_BASE_REF, "$.base-ref")

    def test_missing_base(self, z2):
        """Dependent kinds must embed their base."""
        document = _document(trivial_comodule(z2))
        del document["base"]
        assert _rule(canonical_bytes(document)).rule == DANGLING_BASE_REF

    def test_bialgebra_with_base(self, z2):
        """A bialgebra file may not reference a base."""
        document = _document(z2)
        document["base"] = document["payload"]
        document["base-ref"] = content_hash(document["payload"])
        error = _rule(canonical_bytes(document))
        assert (error.rule, error.location) == (SCHEMA, "$.base")

    @pytest.mark.parametrize("text", ["2/2", "-0", "01", "1.0", "+1"])
    def test_non_canonical_scalar(self, z2, text):
        """Scalars must be in lowest terms without signs or padding."""
        document = _document(z2)
        document["payload"]["mul"]["entries"][0][0] = text
        error = _rule(canonical_bytes(document))
        assert (error.rule, error.location) == (NON_CANONICAL_SCALAR, "$.payload.mul.entries[0][0]")

    def test_grid_mismatch(self, z2):
        """rows and cols must describe the entries."""
        document = _document(z2)
        document["payload"]["unit"]["rows"] = 3
        error = _rule(canonical_bytes(document))
        assert (error.rule, error.location) == (SCHEMA, "$.payload.unit")

    def test_missing_payload_key(self, z2):
        """A missing structure map names its path."""
        document = _document(trivial_comodule(z2))
        del document["payload"]["coaction"]
        error = _rule(canonical_bytes(document))
        assert (error.rule, error.location) == (SCHEMA, "$.payload.coaction")

    def test_bad_monoid_table(self, ks):
        """A table that is not a monoid is a schema error inside the base."""
        document = _document(trivial_comodule(ks))
        document["base"]["monoid"]["table"] = [[1, 1], [1, 1]]
        document["base-ref"] = content_hash(document["base"])
        error = _rule(canonical_bytes(document))
        assert (error.rule, error.location) == (SCHEMA, "$.base.monoid.table")

    def test_square_mismatch(self, z2):
        """The declared cotensor square must match the carrier."""
        document = _document(unit_algebra(z2))
        inclusion = document["payload"]["square"]["inclusion"]
        inclusion["entries"] = [["0"] * inclusion["cols"] for _ in range(inclusion["rows"])]
        error = _rule(canonical_bytes(document))
        assert (error.rule, error.location) == (SCHEMA, "$.payload.square.inclusion")
