"""CLI behavior: formats, exit codes, determinism."""

import io
import json
from contextlib import redirect_stdout

import pytest

from magicfiber.cli import dyadic_decimal, main, round_decimal
from fractions import Fraction


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


class TestSerialization:
    def test_dyadic_decimal_exact(self):
        assert dyadic_decimal(Fraction(1, 4)) == "0.25"
        assert dyadic_decimal(Fraction(-3, 8)) == "-0.375"
        assert dyadic_decimal(Fraction(7)) == "7"
        assert dyadic_decimal(Fraction(3, 2)) == "1.5"

    def test_round_decimal(self):
        assert round_decimal(Fraction(1, 3), 4) == "0.3333"
        assert round_decimal(Fraction(-1, 3), 4) == "-0.3333"
        assert round_decimal(Fraction(2), 4) == "2"

    def test_dyadic_decimal_rejects_non_dyadic(self):
        with pytest.raises(ValueError):
            dyadic_decimal(Fraction(1, 3))


class TestClassCommand:
    def test_full_output(self):
        code, out = run_cli("class", "3", "1", "-2")
        assert code == 0
        assert "t^6 - t^5 - 2*t^3 - t + 1" in out
        assert "genus" in out and "1.7220838" in out

    def test_out_of_cone_exit_2(self):
        code, out = run_cli("class", "1", "0", "0")
        assert code == 2
        assert "norm" in out  # partial output still emitted

    def test_norm_only_exit_0(self):
        code, out = run_cli("class", "1", "0", "0", "--norm-only")
        assert code == 0
        code, out = run_cli("class", "0", "0", "0", "--norm-only")
        assert code == 0

    def test_zero_class_exit_2(self):
        code, _ = run_cli("class", "0", "0", "0")
        assert code == 2

    def test_json_root_bracket_present(self):
        code, out = run_cli("class", "3", "1", "-2", "--format", "json")
        rec = json.loads(out)
        assert rec["schema_version"] == "1"
        row = rec["rows"][0]
        assert row["lambda_lo"].startswith("1.72")
        assert row["lambda_hi"].startswith("1.72")

    def test_precision_ceiling_exit_3(self):
        code, _ = run_cli("class", "3", "1", "-2", "--tol", "1/100000000000000000000000000000000000000000000000000",
                          "--max-bits", "128")
        assert code == 3


class TestUsageErrors:
    def test_unknown_command(self):
        code, _ = run_cli("frobnicate")
        assert code == 2

    def test_bad_tol(self):
        code, _ = run_cli("class", "3", "1", "-2", "--tol", "zero")
        assert code == 2

    def test_bad_range(self):
        code, _ = run_cli("bounds", "-g", "2", "-n", "9..3")
        assert code == 2

    def test_bounds_genus_too_small(self):
        code, _ = run_cli("bounds", "-g", "1", "-n", "3..5")
        assert code == 2


class TestStarCommand:
    def test_g7_witness(self):
        code, out = run_cli("star", "--max", "10", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "g,holds,witness_s"
        assert "7,false,5" in lines
        assert "4,true," in lines


class TestBoundsCommand:
    def test_plain_header_contains_volume(self):
        code, out = run_cli("bounds", "-g", "2", "-n", "3..6")
        assert code == 0
        assert "5.3334" in out

    def test_csv_columns(self):
        code, out = run_cli("bounds", "-g", "2", "-n", "8", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "n,status,witness_p,filled,pruned_p,lambda_lo,lambda_hi,lambda"
        assert lines[1].startswith("8,ok,3,")

    def test_no_witness_rows_emitted(self):
        code, out = run_cli("bounds", "-g", "7", "-n", "5..6", "--format", "csv")
        assert code == 0
        assert out.count("no_witness") == 2


class TestJsonRoundTrip:
    @pytest.mark.parametrize(
        "argv",
        [
            ("class", "3", "1", "-2"),
            ("family", "-g", "2", "--p-max", "4"),
            ("bounds", "-g", "2", "-n", "3..10"),
            ("star", "--max", "12"),
            ("asymp", "ratio", "--points", "10,20", "--tol", "1e-8"),
            ("asymp", "bracket", "--m-range", "2..12", "--tol", "1e-8"),
        ],
    )
    def test_round_trip(self, argv):
        code, out = run_cli(*argv, "--format", "json")
        assert code == 0
        parsed = json.loads(out)
        assert json.dumps(parsed, indent=2) + "\n" == out


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("bounds", "-g", "2", "-n", "3..40", "--format", "csv"),
            ("asymp", "bracket", "--m-range", "2..40", "--format", "json"),
            ("asymp", "ratio", "--points", "10,40,90", "--format", "csv"),
        ],
    )
    def test_jobs_do_not_change_bytes(self, argv):
        code1, out1 = run_cli(*argv, "--jobs", "1")
        code8, out8 = run_cli(*argv, "--jobs", "8")
        assert code1 == code8 == 0
        assert out1 == out8


class TestVerifyCommand:
    def test_selected_fast_suites(self):
        code, out = run_cli("verify", "roots", "identity")
        assert code == 0
        assert "roots" in out and "identity" in out

    def test_unknown_suite(self):
        code, _ = run_cli("verify", "nonsense")
        assert code == 2
