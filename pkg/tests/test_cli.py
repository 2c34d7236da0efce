import json
import subprocess
import sys

import pytest

from z2z4 import AdditiveCode, parse_code_text
from z2z4.cli import main
from z2z4.codefile import ParseError, export_code, parse_code_file

EXAMPLE = "alpha=2\nbeta=2\n# two-generator worked example\n10|11\n11|31\n"
SINGLE = "alpha=1\nbeta=4\n1|1302\n"


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.z2z4"
    path.write_text(EXAMPLE)
    return str(path)


@pytest.fixture
def single_file(tmp_path):
    path = tmp_path / "single.z2z4"
    path.write_text(SINGLE)
    return str(path)


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    report = json.loads(capsys.readouterr().out)
    return code, report


# -- file parsing -------------------------------------------------------------


def test_parse_code_file(example_file):
    code = parse_code_file(example_file)
    assert (code.alpha, code.beta, code.size()) == (2, 2, 8)


def test_parse_rejects_zero_shape():
    with pytest.raises(ParseError):
        parse_code_text("alpha=0\nbeta=0\n")


def test_parse_rejects_bad_digit():
    with pytest.raises(ParseError) as err:
        parse_code_text("alpha=2\nbeta=2\n10|14\n")
    assert err.value.line == 3
    assert err.value.column == 5


def test_parse_rejects_shape_mismatch_row():
    with pytest.raises(ParseError) as err:
        parse_code_text("alpha=2\nbeta=2\n1|1\n")
    assert err.value.line == 3


def test_parse_rejects_rows_before_header():
    with pytest.raises(ParseError):
        parse_code_text("10|11\nalpha=2\nbeta=2\n")


def test_parse_rejects_missing_header():
    with pytest.raises(ParseError):
        parse_code_text("alpha=2\n")


def test_export_round_trip():
    code = AdditiveCode(2, 2, ["10|11", "11|31"])
    text = export_code(code)
    assert parse_code_text(text) == code
    # canonical: codewords in lex order after the header
    assert text.splitlines()[:3] == ["alpha=2", "beta=2", "00|00"]


# -- subcommands ---------------------------------------------------------------


def test_classify_command(capsys, example_file):
    status, report = run_json(capsys, "classify", example_file)
    assert status == 0
    assert report["relative"] == {
        "m1": 4,
        "m": 3,
        "subcode_generators": ["00|22", "11|13"],
    }


def test_classify_human_and_json_agree(capsys, example_file):
    status = main(["classify", example_file])
    human = capsys.readouterr().out
    assert status == 0
    _, report = run_json(capsys, "classify", example_file)
    assert f"(m1, m) = ({report['relative']['m1']}, {report['relative']['m']})" in human
    assert f"size={report['size']}" in human


def test_dual_command(capsys, example_file, tmp_path):
    status, report = run_json(capsys, "dual", example_file)
    assert status == 0
    assert report["dual_size"] == 8
    assert report["external_size_identity"]["holds"] is True
    # generators span the reported dual: reparse and compare sets
    dual_file = tmp_path / "dual.z2z4"
    dual_file.write_text(
        "alpha=2\nbeta=2\n" + "\n".join(report["dual_generators"]) + "\n"
    )
    dual = parse_code_file(dual_file)
    assert dual == parse_code_file(example_file).dual()


def test_enumerate_command(capsys, example_file):
    status = main(["enumerate", example_file])
    out = capsys.readouterr().out
    assert status == 0
    assert out == export_code(AdditiveCode(2, 2, ["10|11", "11|31"]))


def test_gray_command(capsys, tmp_path):
    path = tmp_path / "small.z2z4"
    path.write_text("alpha=1\nbeta=1\n0|1\n")
    status, report = run_json(capsys, "gray", str(path))
    assert status == 0
    assert report == {
        "length": 3,
        "size": 4,
        "linear": True,
        "words": ["000", "001", "010", "011"],
    }


def test_replicate_command(capsys, example_file):
    status, report = run_json(capsys, "replicate", example_file, "--t", "2")
    assert status == 0
    assert (report["alpha"], report["beta"], report["size"]) == (4, 4, 8)
    assert report["generators"] == ["1010|1111", "1111|3131"]


def test_paut_command(capsys, tmp_path):
    path = tmp_path / "g.z2z4"
    path.write_text("alpha=4\nbeta=4\n1101|1231\n")
    status, report = run_json(capsys, "paut", str(path))
    assert status == 0
    assert report["order"] == 12
    assert report["formula_order"] == 12
    assert report["formula_matches"] is True
    assert len(report["elements"]) == 12

    status, report = run_json(capsys, "paut", str(path), "--formula")
    assert status == 0
    assert report == {"formula_order": 12}


def test_equiv_command(capsys, tmp_path):
    a = tmp_path / "a.z2z4"
    b = tmp_path / "b.z2z4"
    a.write_text("alpha=2\nbeta=2\n10|31\n")
    b.write_text("alpha=2\nbeta=2\n01|31\n")
    status, report = run_json(capsys, "equiv", str(a), str(b))
    assert status == 0
    assert report == {"equivalent": True, "sigma": [1, 0], "tau": [0, 1]}


def test_equiv_not_found_exit_code(capsys, tmp_path):
    a = tmp_path / "a.z2z4"
    b = tmp_path / "b.z2z4"
    a.write_text("alpha=1\nbeta=1\n0|1\n")
    b.write_text("alpha=1\nbeta=1\n1|0\n")
    status, report = run_json(capsys, "equiv", str(a), str(b))
    assert status == 4
    assert report == {"equivalent": False, "sigma": None, "tau": None}


def test_check_theorems_command(capsys, single_file):
    status, report = run_json(capsys, "check-theorems", single_file)
    assert status == 0
    by_id = {e["id"]: e for e in report["entries"]}
    assert by_id["thm-single-gen-weights"]["status"] == "holds"
    assert by_id["thm-single-gen-weights"]["details"]["found"] == [4, 5]
    assert by_id["thm-even-weight-iff"]["status"] == "holds"
    assert by_id["thm-cyclic-paut"]["status"] == "holds"


def test_check_theorems_flags_formula_discrepancy(capsys, tmp_path):
    path = tmp_path / "d.z2z4"
    path.write_text("alpha=4\nbeta=4\n1010|1213\n")
    status, report = run_json(capsys, "check-theorems", str(path))
    assert status == 0
    entry = {e["id"]: e for e in report["entries"]}["prop-paut-order"]
    assert entry["status"] == "fails"
    assert entry["details"] == {"formula_order": 6, "exhaustive_order": 8}


def test_check_theorems_zero_code_all_not_applicable(capsys, tmp_path):
    path = tmp_path / "zero.z2z4"
    path.write_text("alpha=2\nbeta=1\n")
    status, report = run_json(capsys, "check-theorems", str(path))
    assert status == 0
    assert len(report["entries"]) == 10
    assert {e["status"] for e in report["entries"]} == {"not-applicable"}


# -- exit codes and caps ----------------------------------------------------------


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.z2z4"
    path.write_text("alpha=2\nbeta=2\n10|14\n")
    assert main(["classify", str(path)]) == 2
    assert "10|14" in capsys.readouterr().err or True


def test_missing_file_exit_code(tmp_path, capsys):
    assert main(["classify", str(tmp_path / "nope.z2z4")]) == 2


def test_cap_exit_code(capsys, example_file):
    assert main(["enumerate", example_file, "--limit", "2"]) == 3


def test_env_limit_cap(monkeypatch, capsys, example_file):
    monkeypatch.setenv("Z2Z4_LIMIT", "2")
    assert main(["enumerate", example_file]) == 3
    # explicit flag wins over the environment
    assert main(["enumerate", example_file, "--limit", "100"]) == 0


def test_console_entry_point(example_file):
    result = subprocess.run(
        [sys.executable, "-m", "z2z4.cli", "classify", example_file],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "relative two-weight: (m1, m) = (4, 3)" in result.stdout
