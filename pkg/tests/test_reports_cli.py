import json
import subprocess
import sys

import pytest

from monosig.catalog import ONE_GAP_EXAMPLE, SIGNATURE_EXAMPLE
from monosig.cli import main
from monosig.io import parse_ideal_string
from monosig.reports import (
    PRINCIPAL_NOTE,
    check_report,
    classify,
    entries_from_text,
    invariant_report,
    trace_report,
)

WORKED = f"({SIGNATURE_EXAMPLE})"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_trace_report_worked_example():
    r = trace_report(parse_ideal_string(SIGNATURE_EXAMPLE))
    assert [s["reg"] for s in r["trace"]] == [[12, 8], [8, 8], [8, 7], [7, 4], [4, 4]]
    assert [s["v"] for s in r["trace"]] == [[4, 4], [4, 4], [4, 3], [3, 3], [3, 3]]
    assert [s["substitution"] for s in r["trace"]] == [
        "x0 -> x1^5", "x0 -> x2^2", "x0 -> x3^2", "x0 -> x3^4", "x0 -> x4^2"]
    assert r["weights"] == [5, 2, 2, 4, 2]
    assert r["polarized_invariants"] == {"dim": 7, "depth": 5, "pd": 4, "reg": 4}


def test_trace_report_edge_cases():
    r = trace_report(parse_ideal_string("x1^2*x2", 3))
    assert r["note"] == PRINCIPAL_NOTE and r["trace"] == []
    r = trace_report(parse_ideal_string("x1*x2, x2*x3, x1*x3"))
    assert r["trace"] == [] and r["signature"] == ["x1*x2", "x1*x3", "x2*x3"]
    r = trace_report(parse_ideal_string(ONE_GAP_EXAMPLE))
    assert len(r["trace"]) == 1
    assert r["trace"][0]["polarized"] == ["x1*x2^2", "x2^3", "x1*x3^2*x0", "x1^2*x2*x3*x0"]
    r = trace_report(parse_ideal_string("x1*x2, x1*x3^2"))
    assert r["note"].startswith("height one")


def test_invariant_report_is_consistent():
    r = invariant_report(parse_ideal_string(SIGNATURE_EXAMPLE))
    assert check_report(r)
    inv = r["invariants"]
    assert (inv["depth"], inv["pd"], inv["reg"], inv["v"], inv["height"]) == (0, 4, 12, 4, 2)
    assert r["signature_invariants"]["reg"] == 4
    assert set(r) >= {"ideal", "signature", "invariants", "ass", "trace", "field"}


def test_classify_reports_parse_errors_per_entry():
    text = "3 2\nx1*x2\nx3\n\n3 2\nx1*q\nx2\n\n3 2\nx1^2*x2\nx2*x3\n"
    entries = entries_from_text(text)
    r = classify(entries)
    assert r["summary"]["entries"] == 3 and r["summary"]["errors"] == 1
    assert "error" in r["entries"][1]
    assert r["entries"][2]["warnings"]


def test_cli_sgn_and_json(capsys):
    code, out, _ = run(capsys, "sgn", WORKED)
    assert code == 0
    assert out.splitlines()[0] == "sgn(I) = (x1*x2*x3, x2^2*x4, x2*x4^2, x2*x3^2*x4, x1^2*x3^3)"
    code, out, _ = run(capsys, "sgn", WORKED, "--json")
    assert json.loads(out)["signature_matrix"][0] == [1, 0, 0, 0, 2]


def test_cli_document_input(capsys, tmp_path):
    path = tmp_path / "i.txt"
    path.write_text("3 2\n3 1 0\n0 4 1\n")
    code, out, _ = run(capsys, "sgn", str(path), "--document")
    assert code == 0 and out == "3 2\nx1\nx2*x3\n"


def test_cli_invariants_trace_ass_vnum(capsys):
    code, out, _ = run(capsys, "invariants", WORKED, "--json", "--weights", "1,1,1,1")
    data = json.loads(out)
    assert code == 0 and data["invariants"]["reg_weighted"] == 12
    assert len(data["trace"]) == 5
    code, out, _ = run(capsys, "trace", WORKED)
    assert "step 5: x4  p=1  q=(3)  x0 -> x4^2" in out
    code, out, _ = run(capsys, "ass", "(x1*x2*x3, x1*x2^2)")
    assert "Ass(I) = {(x1), (x2), (x2, x3)}" in out
    code, out, _ = run(capsys, "vnum", WORKED)
    assert out.strip().endswith("v(I) = 4")


def test_cli_field_flag(capsys):
    code, out, _ = run(capsys, "invariants", "(x1, x2)", "--field", "p=3", "--json")
    assert json.loads(out)["invariants"]["field"] == "GF(3)"


def test_cli_classify_builtin(capsys):
    code, out, _ = run(capsys, "classify", "--builtin", "matrices3x3", "--filter", "cm", "--json")
    data = json.loads(out)
    assert code == 0 and data["summary"]["cm"] == 10 and len(data["entries"]) == 10
    code, out, _ = run(capsys, "classify", "--builtin", "cm3x3", "--builtin", "cm4x3",
                       "--builtin", "cm3x4", "--filter", "gorenstein", "--json")
    assert [e["signature"] for e in json.loads(out)["entries"]] == [["x1", "x2", "x3"]]


def test_cli_classify_matrix_file(capsys, tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("2 2\n1 0\n0 1\n\n2 2\n1 x\n0 1\n")
    code, out, _ = run(capsys, "classify", "--matrices", str(path))
    assert code == 2
    assert "#2: ERROR" in out and "summary: 2 entries, 1 errors" in out


def test_cli_enumerate_and_verify(capsys):
    code, out, _ = run(capsys, "enumerate", "3", "3", "--json")
    assert json.loads(out)["count"] == 73
    code, out, _ = run(capsys, "verify", "depth", "--count", "20", "--seed", "7")
    assert code == 0 and out.startswith("PASS depth: 20/20")


def test_cli_exit_codes(capsys):
    assert run(capsys, "sgn", "(x1*y)")[0] == 2
    assert run(capsys, "sgn", "(x1, x2)", "-n", "1")[0] == 2
    assert run(capsys, "invariants", "(x1, x2)", "--weights", "1")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "no-such-check"])
    assert info.value.code == 2


def test_reports_are_deterministic(capsys):
    a = run(capsys, "verify", "ass", "--count", "15", "--seed", "11", "--json")[1]
    b = run(capsys, "verify", "ass", "--count", "15", "--seed", "11", "--json")[1]
    assert a == b


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "monosig", "sgn", "(x1^3, x1*x2^5)"],
                         capture_output=True, text=True, check=True).stdout
    assert out.splitlines()[0] == "sgn(I) = (x1, x2)"
