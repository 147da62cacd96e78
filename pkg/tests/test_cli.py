"""Tests for the command-line surface and its exit-code contract."""
import io
import json

import pytest

from polyeuler.cli.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, _glue_negative_values, main
from polyeuler.shared.rationals import canonical
from polyeuler.theorem_verifier.suite import THEOREMS
from polyeuler.theorem_verifier.report import VerifyReport
from tests.test_euler import TABLE_NEGATIVE_K, TABLE_POSITIVE_K


def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()


def markdown_cells(text):
    rows = [line for line in text.splitlines() if line.startswith("| ") and not line.startswith("| n ")]
    return [[cell.strip() for cell in row.strip("|").split("|")][1:] for row in rows]


class TestValue:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (["value", "poly-euler2", "--k", "-3", "--n", "5"], "2741670\n"),
            (["value", "comp-euler", "--n", "0"], "1\n"),
            (["value", "poly-euler2", "--k", "5", "--n", "7"], "763114237/2315250\n"),
            (["value", "bernoulli", "--n", "1", "--convention", "plus"], "1/2\n"),
            (["value", "bernoulli", "--n", "1"], "-1/2\n"),
            (["value", "hyper-euler2", "--N", "1", "--n", "2"], "-1/10\n"),
        ],
    )
    def test_values(self, argv, expected):
        assert run(*argv) == (EXIT_OK, expected)

    def test_missing_k(self, capsys):
        status, out = run("value", "poly-euler2", "--n", "3")
        assert status == EXIT_USAGE
        assert out == ""
        assert "requires k" in capsys.readouterr().err

    def test_unknown_family(self):
        assert run("value", "fibonacci", "--n", "3")[0] == EXIT_USAGE

    def test_k_out_of_range(self):
        assert run("value", "poly-euler2", "--k", "-100", "--n", "3")[0] == EXIT_USAGE

    def test_convention_on_other_family(self):
        assert run("value", "euler", "--n", "2", "--convention", "plus")[0] == EXIT_USAGE

    def test_value_longer_than_default_digit_cap(self):
        status, out = run("value", "poly-bernoulli", "--k", "64", "--n", "200")
        assert status == EXIT_OK
        assert len(out.strip()) > 4300


class TestSeq:
    def test_first_table(self):
        status, out = run("seq", "poly-euler2", "--k", "1..5", "--n", "1..7", "--format", "md")
        assert status == EXIT_OK
        assert markdown_cells(out) == [[canonical(v) for v in row] for row in TABLE_POSITIVE_K]

    def test_second_table(self):
        status, out = run("seq", "poly-euler2", "--k", "0..-4", "--n", "1..7", "--format", "md")
        assert status == EXIT_OK
        assert "| n | k=0 | k=-1 | k=-2 | k=-3 | k=-4 |" in out
        assert markdown_cells(out) == [[str(v) for v in row] for row in TABLE_NEGATIVE_K]

    def test_negative_range_first(self):
        status, out = run("seq", "poly-euler2", "--k", "-4..0", "--n", "1", "--format", "csv")
        assert status == EXIT_OK
        assert out == "n,k=-4,k=-3,k=-2,k=-1,k=0\n1,62,30,14,6,2\n"

    def test_csv_example_values(self):
        status, out = run("seq", "comp-euler", "--n", "24..26", "--format", "csv")
        assert status == EXIT_OK
        assert out.splitlines() == [
            "n,comp-euler",
            "24,1982765468311237/1365",
            "25,0",
            "26,-286994504449393/3",
        ]

    def test_json(self):
        status, out = run("seq", "hyper-euler", "--N", "0..1", "--n", "0..2", "--format", "json")
        assert status == EXIT_OK
        data = json.loads(out)
        assert data["col_labels"] == ["N=0", "N=1"]
        assert data["cells"] == [["1", "1"], ["0", "0"], ["-1", "-1/6"]]

    def test_byte_identical_reruns(self):
        argv = ("seq", "poly-bernoulli", "--k", "-3..3", "--n", "0..6", "--format", "md")
        assert run(*argv) == run(*argv)

    @pytest.mark.parametrize(
        "argv",
        [
            ["seq", "poly-euler2", "--n", "1..3"],
            ["seq", "euler", "--k", "1", "--n", "1..3"],
            ["seq", "euler", "--n", "1..x"],
            ["seq", "euler", "--n", "1..3", "--format", "xlsx"],
            ["seq", "hyper-euler", "--N", "-1", "--n", "2"],
        ],
    )
    def test_bad_arguments(self, argv):
        assert run(*argv)[0] == EXIT_USAGE

    @pytest.mark.parametrize(
        "argv",
        [
            ["seq", "comp-euler", "--n", "0..1000000000"],
            ["seq", "comp-euler", "--n", "1000000000..0"],
            ["seq", "poly-euler2", "--k", "0..-1000000000", "--n", "1..3"],
            ["seq", "hyper-euler", "--N", "0..1000000000", "--n", "2"],
        ],
    )
    def test_oversized_range_rejected_before_enumeration(self, argv):
        assert run(*argv)[0] == EXIT_USAGE


class TestVerify:
    def test_single_theorem(self):
        status, out = run("verify", "denominator", "--nmax", "50")
        assert status == EXIT_OK
        lines = out.splitlines()
        assert len(lines) == 1
        report = json.loads(lines[0])
        assert report["theorem_id"] == "denominator"
        assert report["passed"] is True
        assert report["range"] == {"nmax": 50}

    def test_all(self):
        status, out = run("verify", "all", "--nmax", "8", "--kmax", "3", "--Nmax", "2", "--workers", "2")
        assert status == EXIT_OK
        reports = [json.loads(line) for line in out.splitlines()]
        assert [r["theorem_id"] for r in reports] == list(THEOREMS)
        congruences = reports[list(THEOREMS).index("congruences")]
        flagged = [s for s in congruences["subclaims"] if s["expected_fail"]]
        assert len(flagged) == 1
        assert flagged[0]["counterexample"]["lhs"] == "5"

    def test_failure_exits_one(self, monkeypatch):
        monkeypatch.setitem(
            THEOREMS,
            "denominator",
            lambda ranges: VerifyReport(theorem_id="denominator", range={}, passed=False),
        )
        assert run("verify", "denominator")[0] == EXIT_FAILED

    def test_unknown_theorem(self):
        assert run("verify", "riemann")[0] == EXIT_USAGE

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "products", "--Nmax", "0", "--nmax", "6"],
            ["verify", "duality", "--nmax", "0", "--kmax", "3"],
            ["verify", "positivity", "--nmax", "0"],
        ],
    )
    def test_zero_bounds(self, argv):
        status, out = run(*argv)
        assert status == EXIT_OK
        assert json.loads(out)["passed"] is True

    def test_zero_nmax_where_a_checker_needs_one(self):
        assert run("verify", "denominator", "--nmax", "0")[0] == EXIT_USAGE

    def test_sweep_past_public_caps(self, monkeypatch):
        monkeypatch.setenv("POLYEULER_MAX_N", "20")
        assert run("verify", "denominator", "--nmax", "15")[0] == EXIT_USAGE

    def test_bad_pmax(self):
        assert run("verify", "congruences", "--pmax", "2")[0] == EXIT_USAGE


def test_glue_negative_values():
    assert _glue_negative_values(["seq", "x", "--k", "-4..0", "--n", "1"]) == ["seq", "x", "--k=-4..0", "--n", "1"]
    assert _glue_negative_values(["--k", "3"]) == ["--k", "3"]


def test_help_exits_zero():
    assert run("--help")[0] == EXIT_OK
