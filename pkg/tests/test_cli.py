import json
import subprocess
import sys

import pytest

from glnn.cli import main
from glnn.parsing import parse_bipartition, parse_weight
from glnn.weights import Weight


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_ds_text(capsys):
    assert run(capsys, "ds", "[3,0,0]")[1] == "[3,0]<0> (+) [-1,-1]<-1>"


def test_omega_of_rank_one_trivial(capsys):
    assert run(capsys, "omega", "[0]")[1] == "1"


def test_sdim_of_the_nested_example(capsys):
    assert run(capsys, "sdim", "[3,0,-1,-1]")[1] == "8"
    assert run(capsys, "sdim", "--signed", "[3,0,-1,-1]")[1] == "-8"


def test_ds_json_matches_text(capsys):
    _, text, _ = run(capsys, "ds", "[6,4,4,1]")
    _, raw, _ = run(capsys, "ds", "--json", "[6,4,4,1]")
    data = json.loads(raw)
    rebuilt = " (+) ".join(f"{s['weight']}<{-s['degree']}>" for s in data["summands"])
    assert rebuilt == text
    for s in data["summands"]:
        assert isinstance(parse_weight(s["weight"]), Weight)


def test_global_json_flag(capsys):
    _, raw, _ = run(capsys, "--json", "omega", "[1,0]")
    assert json.loads(raw)["omega"] == {"1": 1, "-1": 1}


def test_iterate(capsys):
    assert run(capsys, "ds", "[3,0,0]", "--iterate", "3")[1] == "[]<1> (+) []<-1> (+) []<-3>"


def test_cohomology(capsys):
    assert run(capsys, "cohomology", "[6,4,4,1]")[1].splitlines() == ["H^1: [6,4,4]", "H^3: [3,3,0] (+) [6,4,0]"]


def test_diagram(capsys):
    code, out, _ = run(capsys, "diagram", "[3,0,0]")
    lines = out.splitlines()
    assert code == 0
    assert lines[1].split() == ["∧", "∨", "∨", "∧", "∧", "∧", "∨", "∧", "∧"]
    assert "└──┘" in lines[2]
    code, out, _ = run(capsys, "diagram", "[2,1,0]", "--window=-3..3")
    assert out.splitlines()[0].split() == [str(p) for p in range(-3, 4)]


def test_diagram_json(capsys):
    data = json.loads(run(capsys, "diagram", "--json", "[3,0,0]")[1])
    assert data["downs"] == [-2, -1, 3]
    assert data["cups"] == [[-2, 1], [-1, 0], [3, 4]]
    assert data["distances"] == [0, 1]
    assert set(data) >= {"crosses", "circles", "downs", "cups", "sectors", "distances"}


def test_dual(capsys):
    out = run(capsys, "dual", "[11,9,9,5,3,3,3]")[1]
    assert out.splitlines()[0] == "weight: [1,1,0,0,-4,-4,-5]"
    assert run(capsys, "dual", "{-2,-1,0}")[1] == "{-2,-1,0}"


def test_forest_and_theta(capsys):
    assert run(capsys, "forest", "[6,4,4,1]")[1] == "(1, (), 2, (()), 0, ())"
    assert run(capsys, "theta", "((1),())", "--rank", "3")[1] == "(1,0,0|0,0,0)"
    out = run(capsys, "theta", "--inverse", "(1,0,0|0,0,0)")[1]
    assert parse_bipartition(out).left == (1,)


def test_translate(capsys):
    out = run(capsys, "translate", "[2,1]", "0")[1]
    assert out == "([2,1] | [1,1] + [2,0] + [2,2] | [2,1])"
    out = run(capsys, "translate", "--audit", "[2,1,0]", "0")[1]
    assert out.endswith("commutation rules hold")


def test_tables(capsys):
    assert run(capsys, "hooks", "2")[1].splitlines()[-1].split() == ["L_2(2)^dual", "[0,-1]"]
    out = run(capsys, "kac-table", "2")[1]
    assert "L_1 = [0,-1]" in out


def test_check_subset(capsys):
    code, out, _ = run(capsys, "check", "catalan", "kac-module")
    assert code == 0
    assert out.splitlines() == ["PASS catalan (8 cases)", "PASS kac-module (4 cases)"]


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "ds", "[3,x,0]")
    assert code == 1
    assert err.splitlines()[:2] == ["[3,x,0]", "   ^"]


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "omega", "(1,0|0,0)")
    assert code == 2 and "maximal atypical" in err
    code, _, err = run(capsys, "translate", "[2,1,0]", "1")
    assert code == 2 and "not admissible" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "glnn.cli", "ds", "[3,0,0]"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "[3,0]<0> (+) [-1,-1]<-1>"
