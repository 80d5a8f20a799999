import json
import subprocess
import sys

import pytest

from lineq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eq_verdicts(capsys):
    code, out, _ = run(capsys, "eq", "t[x;y;y] o (id{x<=y} /\\ r[y])", "del>{x<=y}",
                       "--theory", "m-leq")
    assert code == 0 and json.loads(out) == {"equal": True}
    code, _, _ = run(capsys, "eq", "id{x<=x /\\ x<=x}", "c{x<=x; x<=x}", "--theory", "s-leq")
    assert code == 1


def test_diagram_json(capsys):
    code, out, _ = run(capsys, "diagram", "r[x]", "--theory", "m-leq", "--format", "json")
    assert code == 0
    assert out.strip() == ('{"source":[],"target":["x","x"],"edges":[[["t",0],["t",1]]],'
                           '"loops_discarded":0}')


@pytest.mark.parametrize("fmt,marker", [("dot", "graph G"), ("ascii", "source:")])
def test_diagram_formats(capsys, fmt, marker):
    code, out, _ = run(capsys, "diagram", "t[x;y;z]", "--theory", "m-leq", "--format", fmt)
    assert code == 0 and marker in out


@pytest.mark.parametrize("argv,code", [
    (["type", "t[x;y]"], 3),
    (["type", "t[x;y;z] o r[x]"], 2),
    (["type", "s[x;y]"], 2),
    (["normalize", "r[x]", "--pass", "ds"], 4),
    (["normalize", "t[x;y;z] /\\ t[x;y;z]", "--pass", "develop", "--budget", "1"], 5),
    (["generality", "id{x<=y}", "id{y<=x}"], 2),
    (["star", "r[x]"], 4),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv, "--theory", "m-leq")
    assert got == code
    assert "error" in json.loads(err)


def test_type(capsys):
    code, out, _ = run(capsys, "type", "t[x;y;z]", "--theory", "m-leq")
    assert code == 0 and json.loads(out)["type"] == "x<=y /\\ y<=z |- x<=z"


def test_normalize_prints_derivation(capsys):
    code, out, _ = run(capsys, "normalize", "s[y;x] o s[x;y]", "--pass", "s", "--theory", "m-equiv")
    doc = json.loads(out)
    assert code == 0 and doc["result"] == "id{x==y}" and doc["steps"] == len(doc["derivation"])
    code, out, _ = run(capsys, "normalize", "r[x]", "--pass", "r", "--theory", "m-leq")
    doc = json.loads(out)
    assert doc["f_r"] == "r[x]" and doc["f_prime"] == "id{T}"


def test_diversify(capsys):
    code, out, _ = run(capsys, "diversify", "t[x;x;x]", "--theory", "m-leq")
    doc = json.loads(out)
    assert doc["term"] == "t[v1;v2;v3]" and doc["renaming"] == {"v1": "x", "v2": "x", "v3": "x"}


def test_generality_and_star(capsys):
    assert run(capsys, "generality", "s[x;x]", "id{x==x}", "--theory", "s-equiv")[0] == 1
    assert run(capsys, "star", "t[x;y;z]", "--theory", "m-leq")[0] == 0


def test_axioms(capsys):
    code, out, _ = run(capsys, "axioms", "--theory", "sdot-equiv")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] and len(doc["rows"]) >= 3 * 20


def test_adjoint(capsys):
    code, out, _ = run(capsys, "adjoint", "--y", "y", "--z", "z", "--theory", "s-equiv")
    assert code == 0 and json.loads(out)["ok"]
    code, _, _ = run(capsys, "adjoint", "--y", "y", "--z", "y", "--theory", "s-equiv")
    assert code == 4


def test_fuzz(capsys):
    code, out, _ = run(capsys, "fuzz", "--n", "5", "--seed", "3", "--theory", "s-leq")
    doc = json.loads(out)
    assert code == 0 and doc["failures"] == [] and "max_loops_discarded" in doc


def test_theory_flag_is_required():
    with pytest.raises(SystemExit):
        main(["type", "r[x]"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lineq", "eq", "r[x]", "r[x]", "--theory", "m-leq"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"equal": True}
