import json
import subprocess
import sys
from pathlib import Path

import pytest

from polychar import _linalg
from polychar.cli import build_parser, run
from polychar.expansion import ExpansionMatrix

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"

CASES = {
    "roots_g2": ["roots", "G2"],
    "orbit_a2_1_1": ["orbit", "A2", "1,1"],
    "mult_a2_1_1": ["mult", "A2", "1,1"],
    "polytope_g2_0_3": ["polytope", "G2", "0,3"],
    "expand_g2_1_3": ["expand", "G2", "1,3"],
    "matrix_a3_class1": ["matrix", "A3", "--order", str(DATA / "a3_class1.order")],
    "verify_c2_3": ["verify", "C2", "--max-level", "3"],
    "examples_section2": ["examples", "section2"],
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_output(name):
    status, out, err = run(CASES[name])
    assert status == 0 and err == ""
    assert out + "\n" == (GOLDEN / f"{name}.txt").read_text()


@pytest.mark.parametrize("name", sorted(CASES))
def test_json_is_valid_and_deterministic(name):
    a = run(CASES[name] + ["--json"])
    b = run(CASES[name] + ["--json"])
    assert a == b and a[0] == 0
    json.loads(a[1])


def test_mult_json():
    doc = json.loads(run(["mult", "A2", "1,1", "--json"])[1])
    assert doc["dim"] == 8 and len(doc["weights"]) == 7
    assert {tuple(w["mu"]): w["mult"] for w in doc["weights"]}[(0, 0)] == 2


def test_polytope_json_records_g2_0_3():
    doc = json.loads(run(["polytope", "G2", "0,3", "--json"])[1])
    assert doc["count"] == 37 and doc["closed_form"] == 37 and doc["match"] is True


def test_expand_json():
    doc = json.loads(run(["expand", "G2", "1,1", "--json"])[1])
    assert {tuple(t["mu"]): t["coeff"] for t in doc["row"]} == {(1, 1): 1, (0, 2): 1, (0, 1): 2}


def test_matrix_json_round_trip_reinverts():
    status, out, _ = run(["matrix", "G2", "--max-level", "6", "--json"])
    a = ExpansionMatrix.from_dict(json.loads(out))
    assert a.kind == "A" and len(a.order) == 16
    inv = ExpansionMatrix.from_dict(json.loads(run(["matrix", "G2", "--max-level", "6", "--inverse", "--json"])[1]))
    assert inv.order == a.order
    back = _linalg.inverse(a.rows)
    assert [[int(x) for x in row] for row in back] == inv.rows


def test_matrix_class_selection():
    doc = json.loads(run(["matrix", "A3", "--max-level", "3", "--class", "2", "--json"])[1])
    assert doc["class"] == 2
    status, _, err = run(["matrix", "A3", "--max-level", "3", "--class", "4"])
    assert status == 2 and "--class" in err


@pytest.mark.parametrize(
    "argv,arg",
    [
        (["mult", "X9", "1,0"], "algebra"),
        (["mult", "D2", "1,0"], "algebra"),
        (["mult", "A2", "1,x"], "lambda"),
        (["mult", "A2", "1,0,0"], "lambda"),
        (["mult", "A2", "1,-1"], "lambda"),
        (["expand", "G2", "-1,0"], "lambda"),
        (["matrix", "G2"], "--max-level"),
        (["matrix", "A3", "--order", "/nonexistent/order"], "--order"),
        (["examples", "section9"], "name"),
    ],
)
def test_argument_errors_exit_2(argv, arg):
    status, out, err = run(argv)
    assert status == 2 and out == ""
    assert err.startswith(f"polychar: error: argument {arg}:")
    assert "\n" not in err


@pytest.mark.parametrize("argv", [["expand", "E8", "0,0,0,0,0,0,0,1"], ["verify", "E7", "--max-level", "1"]])
def test_size_guards_exit_2(argv):
    status, _, err = run(argv)
    assert status == 2 and err.startswith("polychar: error: argument algebra:")


def test_order_not_closed_is_usage_error(tmp_path):
    f = tmp_path / "bad.order"
    f.write_text("0,0\n1,0\n0,2\n")
    status, _, err = run(["matrix", "G2", "--order", str(f)])
    assert status == 2 and "missing" in err


def test_orbit_accepts_non_dominant():
    status, out, _ = run(["orbit", "A2", "-1,1"])
    assert status == 0 and "3 weights" in out


def test_verify_exit_status_and_report():
    status, out, _ = run(["verify", "G2", "--max-level", "4", "--json"])
    doc = json.loads(out)
    assert status == 0
    assert doc["counts"]["identity_failures"] == [] and doc["conjectures"]["negative_entries"] == []


def test_help_lists_every_verb():
    text = build_parser().format_help()
    for verb in ["roots", "orbit", "mult", "polytope", "expand", "matrix", "verify", "examples"]:
        assert verb in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polychar", "mult", "A2", "1,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and "dim 8" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "polychar", "mult", "A2", "1,-1"], capture_output=True, text=True)
    assert proc.returncode == 2 and "argument lambda" in proc.stderr
