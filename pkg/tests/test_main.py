"""Test the trimodule-lab command line."""

import json
from pathlib import Path

import pytest

from trimodule_lab.main import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, run_command
from trimodule_lab.models.schemas import StructureKind
from trimodule_lab.services.comodule import (
    LeftComoduleFD,
    regular_right_comodule,
    simple_graded_comodule,
    trivial_comodule,
)
from trimodule_lab.services.exact_kernel import LinearMap
from trimodule_lab.services.serialization import parse, write_structure
from trimodule_lab.services.trimodule import regular_trimodule
from trimodule_lab.services.trimodule_algebra import free_module, unit_algebra

GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def write(tmp_path):
    """Write a structure under tmp_path and return the path as a string."""

    def _write(name, obj):
        return str(write_structure(tmp_path / name, obj))

    return _write


class TestValidate:
    """The validate command."""

    def test_valid_bialgebra(self, write, h4):
        """A fixture written to disk validates."""
        assert run_command(["validate", write("h4.json", h4)]) == EXIT_OK

    def test_failed_check(self, write, z2, capsys):
        """A non-counital coaction exits 1 and names the check."""
        broken = LeftComoduleFD(z2, 1, LinearMap.column_vector([1, 1]))
        assert run_command(["validate", write("broken.json", broken)]) == EXIT_CHECK_FAILED
        assert "counit" in capsys.readouterr().out

    def test_json_format(self, write, z2, capsys):
        """--format json prints a report document."""
        assert run_command(["validate", "--format", "json", write("z2.json", z2)]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert all(check["passed"] for check in report["checks"])

    def test_malformed_file(self, tmp_path, capsys):
        """Syntax errors exit 2 with the rule on stderr."""
        path = tmp_path / "bad.json"
        path.write_text('{"kind":', encoding="utf-8")
        assert run_command(["validate", str(path)]) == EXIT_USAGE
        assert "malformed-syntax" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        """Unreadable inputs are usage errors."""
        assert run_command(["validate", str(tmp_path / "absent.json")]) == EXIT_USAGE


class TestAntipode:
    """The antipode command on fixtures and files."""

    def test_fixture_name(self, capsys):
        """H4 has an antipode and the solution is printed."""
        assert run_command(["antipode", "--format", "json", "H4"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["data"]["antipode"][2] == ["0", "0", "0", "1"]

    def test_monoid_has_none(self, capsys):
        """k[S] exits 1 with the rank certificate."""
        assert run_command(["antipode", "k[S]"]) == EXIT_CHECK_FAILED
        assert "rank" in capsys.readouterr().out

    def test_twisted(self):
        """The twisted antipode of H4 exists too."""
        assert run_command(["antipode", "--twisted", "H4"]) == EXIT_OK

    def test_wrong_kind(self, write, z2, capsys):
        """A comodule file is not a bialgebra."""
        assert run_command(["antipode", write("k.json", trivial_comodule(z2))]) == EXIT_USAGE
        assert "schema" in capsys.readouterr().err


class TestConstructions:
    """Commands that write structure files."""

    def test_reconstruct_matches_golden(self, tmp_path):
        """The pointed reconstruction is byte-identical to the stored file."""
        target = tmp_path / "out.json"
        code = run_command([
            "reconstruct", "--pointed", str(GOLDEN / "monoid_s.json"), str(GOLDEN / "eps_s.json"), "-o", str(target)
        ])
        assert code == EXIT_OK
        assert target.read_bytes() == (GOLDEN / "pointed_ks.json").read_bytes()

    def test_reconstruct_rejects_bad_eps(self, tmp_path):
        """eps must be an object."""
        eps = tmp_path / "eps.json"
        eps.write_text('{"eps": [1, 0]}', encoding="utf-8")
        code = run_command(["reconstruct", "--pointed", str(GOLDEN / "monoid_s.json"), str(eps), "-o", "x.json"])
        assert code == EXIT_USAGE

    def test_bdotb(self, tmp_path):
        """B•B over k[Z/2] is written as a trimodule algebra."""
        target = tmp_path / "bb.json"
        assert run_command(["bdotb", "k[Z/2]", "-o", str(target)]) == EXIT_OK
        assert parse(target.read_bytes()).kind == StructureKind.TRIMODULE_ALGEBRA

    def test_cotensor_of_trimodules(self, write, tmp_path, z2):
        """B□B of regular trimodules is again a trimodule."""
        x = write("b.json", regular_trimodule(z2))
        target = tmp_path / "bb.json"
        assert run_command(["cotensor", x, x, "-o", str(target)]) == EXIT_OK
        assert parse(target.read_bytes()).kind == StructureKind.TRIMODULE

    def test_cotensor_without_coaction(self, write, tmp_path, z2):
        """A right comodule cotensored with a left comodule has nothing to serialize."""
        x = write("r.json", regular_right_comodule(z2))
        y = write("l.json", trivial_comodule(z2))
        assert run_command(["cotensor", x, y, "-o", str(tmp_path / "out.json")]) == EXIT_USAGE

    def test_cotensor_of_bialgebra_file(self, write, tmp_path, z2, capsys):
        """A bialgebra file is not a cotensor factor."""
        b = write("z2.json", z2)
        assert run_command(["cotensor", b, b, "-o", str(tmp_path / "out.json")]) == EXIT_USAGE
        assert "schema" in capsys.readouterr().err
        assert not (tmp_path / "out.json").exists()

    def test_reconstruct_rejects_malformed_monoid(self, tmp_path, capsys):
        """Elements and table must be a list of names and a square table of names."""
        monoid = tmp_path / "monoid.json"
        monoid.write_text('{"elements": 5, "table": 3}', encoding="utf-8")
        code = run_command(["reconstruct", "--pointed", str(monoid), str(GOLDEN / "eps_s.json"), "-o", "x.json"])
        assert code == EXIT_USAGE
        err = capsys.readouterr().err
        assert "schema" in err
        assert "$.elements" in err

    def test_reconstruct_rejects_ragged_table(self, tmp_path):
        """A table that is not |S| x |S| is a schema error."""
        monoid = tmp_path / "monoid.json"
        monoid.write_text('{"elements": ["e", "s"], "table": [["e", "s"]]}', encoding="utf-8")
        code = run_command(["reconstruct", "--pointed", str(monoid), str(GOLDEN / "eps_s.json"), "-o", "x.json"])
        assert code == EXIT_USAGE


class TestChecks:
    """chi, linton and fusion."""

    def test_chi(self, write, z2, capsys):
        """χ on the regular trimodule is colinear and unital."""
        x = write("b.json", regular_trimodule(z2))
        m = write("m.json", trivial_comodule(z2))
        n = write("n.json", simple_graded_comodule(z2, "g"))
        assert run_command(["chi", "--format", "json", x, m, n]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["data"]["shape"] == [1, 1]

    def test_linton(self, write, z2, capsys):
        """δ_g ▶ T(k) over the unit algebra passes the oracle."""
        a = unit_algebra(z2)
        code = run_command([
            "linton", "--format", "json",
            write("a.json", a),
            write("v.json", simple_graded_comodule(z2, "g")),
            write("m.json", free_module(a, trivial_comodule(z2))),
        ])
        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out)["data"]["dim"] == 1

    def test_fusion(self, capsys):
        """k[S] is not right Hopf but the report is consistent."""
        assert run_command(["fusion", "--format", "json", "k[S]"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)["data"]
        assert data == {"galois-rank": 3, "right-hopf": False}


class TestParser:
    """Usage handling."""

    def test_no_command(self):
        """A subcommand is required."""
        assert run_command([]) == EXIT_USAGE

    def test_version(self, capsys):
        """--version exits 0."""
        assert run_command(["--version"]) == EXIT_OK
        assert "trimodule-lab" in capsys.readouterr().out

    @pytest.mark.integration
    def test_report_single_criterion(self, capsys):
        """The antipode criterion passes and prints an overall line."""
        assert run_command(["report", "--criteria", "C05"]) == EXIT_OK
        assert "overall: PASS" in capsys.readouterr().out

    def test_report_unknown_criterion(self):
        """Unknown identifiers are rejected by the parser."""
        assert run_command(["report", "--criteria", "C99"]) == EXIT_USAGE
