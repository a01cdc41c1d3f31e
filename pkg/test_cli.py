"""
Test CLI - subcommands, output formats and exit codes
"""
import json
import math

import pytest

from main import main
from src.cli.commands import TABLE_COLUMNS, TableRequest, build_table, parse_n_range, parse_radii
from src.bounds.bounds import BOUND_COLUMNS
from src.core.exceptions import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# read / dist / decompose

def test_read_prints_read_vector(capsys):
    code, out, _ = run(capsys, "read", "--q", "2", "--ell", "2", "--word", "010")
    assert code == 0
    assert out == "[{0,0},{0,1},{0,1},{0,0}]\n"


def test_read_empty_word(capsys):
    code, out, _ = run(capsys, "read", "--q", "2", "--word", "")
    assert code == 0
    assert out.strip() == "[{0,0}]"


def test_read_rejects_short_read_length(capsys):
    code, out, err = run(capsys, "read", "--q", "2", "--ell", "1", "--word", "010")
    assert code == 2
    assert out == ""
    assert "Error:" in err


def test_read_rejects_bad_symbol(capsys):
    code, _, _ = run(capsys, "read", "--q", "2", "--word", "012")
    assert code == 2


def test_dist(capsys):
    code, out, _ = run(capsys, "dist", "--q", "2", "--x", "01", "--y", "10")
    assert code == 0
    assert json.loads(out) == {"x": "01", "y": "10", "ell": 2, "read_distance": 2, "hamming_distance": 2}


def test_dist_length_mismatch(capsys):
    code, _, _ = run(capsys, "dist", "--q", "2", "--x", "01", "--y", "010")
    assert code == 2


def test_decompose_two_read(capsys):
    code, out, _ = run(capsys, "decompose", "--q", "2", "--x", "000", "--y", "101")
    assert code == 0
    result = json.loads(out)
    assert list(result)[:5] == ["u", "blocks", "w", "s", "predicted_d"]
    assert result["predicted_d"] == 4
    assert result["d4"]["tag"] == "CaseA"


def test_decompose_three_read(capsys):
    code, out, _ = run(capsys, "decompose", "--q", "2", "--ell", "3", "--x", "000", "--y", "111")
    assert code == 0
    result = json.loads(out)
    assert result["confusable"] is False
    assert result["read_distance"] > 2


def test_decompose_identical_words(capsys):
    code, _, _ = run(capsys, "decompose", "--q", "2", "--x", "0110", "--y", "0110")
    assert code == 2


# check / enum

def test_enum_bounded_example(capsys):
    code, out, err = run(capsys, "enum", "--family", "bounded", "--q", "2", "--d", "3", "--P", "2",
                         "--n", "3", "--best")
    assert code == 0
    lines = out.splitlines()
    header = json.loads(lines[0])
    assert header["size"] == 2
    assert header["spec"]["moduli"] == [3, 2]
    assert lines[1:] == ["000", "111"]
    assert "guaranteed" in err
    assert "redundancy <= 2.000" in err


def test_enum_with_explicit_residues(capsys):
    code, out, _ = run(capsys, "enum", "--family", "bounded", "--q", "2", "--d", "3", "--P", "2",
                       "--n", "3", "--residues", "0,0")
    assert code == 0
    assert out.splitlines()[1:] == ["000", "111"]


def test_enum_best_and_residues_conflict(capsys):
    code, _, _ = run(capsys, "enum", "--family", "bounded", "--q", "2", "--n", "3", "--best", "--residues", "0,0")
    assert code == 2


def test_enum_budget_exceeded(capsys):
    code, _, err = run(capsys, "--budget", "4", "enum", "--family", "bounded", "--q", "2", "--n", "6",
                       "--residues", "0,0")
    assert code == 2
    assert "Error:" in err


def test_check_membership(capsys):
    code, out, _ = run(capsys, "check", "--family", "bounded", "--q", "2", "--d", "3", "--P", "2",
                       "--word", "111", "--residues", "0,0")
    assert code == 0
    result = json.loads(out)
    assert result["member"] is True
    assert result["spec"]["residues"] == [0, 0]


def test_check_unknown_family(capsys):
    code, _, _ = run(capsys, "check", "--family", "nonsense", "--q", "2", "--word", "111")
    assert code == 2


# verify

def test_verify_check_passes(capsys):
    code, out, err = run(capsys, "verify", "--check", "char2", "--q", "2", "--nmin", "1", "--nmax", "4")
    assert code == 0
    report = json.loads(out)
    assert report["result"] == "pass"
    assert report["counterexample"] is None
    assert "PASS" in err


def test_verify_broken_check_fails(capsys, broken_check):
    code, out, _ = run(capsys, "verify", "--check", broken_check, "--nmin", "1", "--nmax", "3")
    assert code == 1
    report = json.loads(out)
    assert report["result"] == "fail"
    assert (report["counterexample"]["x"], report["counterexample"]["y"]) == ("0", "1")


def test_verify_unknown_check(capsys):
    code, _, _ = run(capsys, "verify", "--check", "no_such_check")
    assert code == 2


def test_verify_needs_check_or_family(capsys):
    code, _, _ = run(capsys, "verify")
    assert code == 2


def test_verify_family(capsys):
    code, out, _ = run(capsys, "verify", "--family", "cp", "--n", "6")
    assert code == 0
    report = json.loads(out)
    assert report["check"] == "family:cp"
    assert report["result"] == "pass"


def test_verify_family_needs_n(capsys):
    code, _, _ = run(capsys, "verify", "--family", "cp")
    assert code == 2


def test_verify_output_is_worker_independent(capsys):
    _, single, _ = run(capsys, "--workers", "1", "verify", "--check", "ins_equiv", "--nmax", "5")
    _, several, _ = run(capsys, "--workers", "3", "verify", "--check", "ins_equiv", "--nmax", "5")
    assert single == several


# bounds / table

def test_bounds_csv(capsys):
    code, out, _ = run(capsys, "bounds", "--q", "2", "--n", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == ",".join(BOUND_COLUMNS)
    assert lines[1].startswith("hamming_redundancy,8,2,,5,")


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--q", "2", "--n", "8", "--t", "1", "--d", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["name"] == "hamming_redundancy"
    assert rows[0]["t"] is None
    assert any(row["name"] == "levenshtein_N" and row["value"] == "2" for row in rows)


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--families", "cp,cdel", "--q", "2", "--n", "6..8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == ",".join(TABLE_COLUMNS)
    assert [line.split(",")[:2] for line in lines[1:]] == [
        ["cp", "6"], ["cp", "7"], ["cp", "8"], ["cdel", "6"], ["cdel", "7"], ["cdel", "8"],
    ]


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--families", "cp", "--n", "6..8:2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [row["n"] for row in rows] == [6, 8]
    for row in rows:
        assert list(row) == TABLE_COLUMNS
        assert row["redundancy"] == pytest.approx(row["n"] - math.log2(row["size"]), abs=1e-6)


def test_table_writes_out_file(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, "table", "--families", "cp", "--n", "6..7", "--out", str(target))
    assert code == 0
    assert out == ""
    content = target.read_bytes()
    assert b"\r\n" not in content
    assert content.decode().splitlines()[0] == ",".join(TABLE_COLUMNS)


def test_table_is_deterministic(capsys):
    first = run(capsys, "table", "--families", "cp,c24", "--n", "6..8")[1]
    second = run(capsys, "--workers", "2", "table", "--families", "cp,c24", "--n", "6..8")[1]
    assert first == second


def test_table_skips_invalid_lengths(capsys):
    code, out, _ = run(capsys, "table", "--families", "cp", "--n", "1..3")
    assert code == 0
    assert [line.split(",")[1] for line in out.splitlines()[1:]] == ["2", "3"]


@pytest.mark.parametrize("bad", ["8..6", "6..8:0", "six"])
def test_table_rejects_bad_range(capsys, bad):
    code, _, _ = run(capsys, "table", "--families", "cp", "--n", bad)
    assert code == 2


def test_table_c33_uses_three_reads():
    frame = build_table(TableRequest(["c33"], 6, 6))
    assert list(frame["family"]) == ["c33"]
    assert frame["size"].iloc[0] >= 1


# argument parsing helpers

def test_parse_n_range():
    assert list(parse_n_range("8..12:2")) == [8, 10, 12]
    assert list(parse_n_range("5")) == [5]
    with pytest.raises(ParseError):
        parse_n_range("1..")


def test_parse_radii():
    assert parse_radii("1:1,2:3") == [(1, 1), (2, 3)]
    with pytest.raises(ParseError):
        parse_radii("2")


def test_table_request_validation():
    with pytest.raises(ParseError):
        TableRequest(["cp"], 8, 6)
    with pytest.raises(ParseError):
        TableRequest(["cp"], 6, 8, format="xml")
