import json
import subprocess
import sys

import pytest

from manetti import __version__
from manetti.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def result(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    env = json.loads(out)
    assert set(env) == {"command", "parameters", "result", "version"}
    assert env["version"] == __version__
    return env["result"]


def test_hj_commands(capsys):
    assert result(capsys, "hj", "expand", "25/14")["string"] == [2, 5, 3]
    assert result(capsys, "hj", "eval", "4")["fraction"] == "4/1"
    assert result(capsys, "hj", "conjugate", "9/2")["conjugate"] == "9/7"
    assert result(capsys, "hj", "conjugate", "5,2")["conjugate"] == "9/7"
    assert result(capsys, "hj", "reverse", "2,5,3")["fraction"] == "25/9"
    r = result(capsys, "hj", "pair", "2", "2", "--side", "left-raise")
    assert r["conjugate"] and r["grown"] == [[3], [2, 2]]


def test_sing_commands(capsys):
    r = result(capsys, "sing", "8", "1", "3")
    assert (r["class"]["d"], r["class"]["n"], r["class"]["a"]) == (2, "2", "1")
    assert (r["milnor"], r["index"], r["cover"], r["resolution"]) == (1, "2", "A3", [3, 3])
    assert result(capsys, "sing", "1", "1", "1")["class"]["kind"] == "smooth"
    assert result(capsys, "sing", "5", "1", "1")["class"]["kind"] == "not-T"


def test_markov_commands(capsys):
    code, out, _ = run(capsys, "markov", "1", "--bound", "5", "--dot")
    assert code == 0 and out.startswith("digraph")
    assert sum(1 for line in out.splitlines() if "->" not in line and line.endswith(";")) == 3
    r = result(capsys, "markov", "4", "--bound", "2")
    assert r["nodes"] == [["1", "2", "1"]]
    assert result(capsys, "markov", "1", "--bound", "1")["nodes"] == [["1", "1", "1"]]


def test_big_integers_are_strings(capsys):
    r = result(capsys, "markov", "1", "--bound", "100000")
    assert ["1", "13", "34"] in r["nodes"]
    assert all(isinstance(x, str) for node in r["nodes"] for x in node)


def test_surface_and_deform(capsys):
    r = result(capsys, "surface", "4", "1", "2", "1")
    assert r["weights"] == ["1", "4", "5"] and r["k2"] == 5 and r["rho"] == 1
    assert sorted(b["label"] for b in r["basket"]) == ["A4", "T1(1/4(1,1))"]
    r = result(capsys, "deform", "2", "1", "1", "1", "--rho-one")
    assert [[b["label"] for b in e["basket"]] for e in r["elements"]] == [["A1"]]
    r = result(capsys, "deform", "2", "1", "1", "1")
    assert len(r["elements"]) == 2


def test_fibre_and_classify(capsys):
    r = result(capsys, "fibre", "II", "2", "2", "1")
    assert r["lemma_T"] == {"d": 2, "string": [3, 3]}
    assert r["associated"]["right"] == [3, 3]
    assert result(capsys, "fibre", "I", "2,2,2", "4")["valid"] is True
    assert len(result(capsys, "fibre", "enumerate", "5")["fibres"]) == 11
    r = result(capsys, "classify", "--n-bound", "5")
    assert r["patterns"] == [[1, 1, 1], [1, 1, 2], [1, 1, 5], [1, 2, 3]]


def test_tstring_and_manetti(capsys):
    assert result(capsys, "tstring", "check", "3,3")["d"] == 2
    assert result(capsys, "tstring", "generate", "1", "--max-len", "2")["strings"] == [[2, 5], [4], [5, 2]]
    assert len(result(capsys, "manetti", "--bound", "5")["surfaces"]) == 7


def test_verify_quick(capsys):
    r = result(capsys, "verify", "--quick")
    assert r["passed"] is True


def test_exit_codes(capsys):
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "hj", "expand", "abc")[0] == 1
    assert run(capsys, "hj", "eval", "2,x")[0] == 1
    assert run(capsys, "fibre", "II", "2", "2")[0] == 1
    code, _, err = run(capsys, "sing", "6", "2", "1")
    assert code == 2 and "non-isolated" in err
    assert run(capsys, "hj", "expand", "3/6")[0] == 2
    assert run(capsys, "surface", "1", "1", "2", "3")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    import manetti.cli as cli

    monkeypatch.setattr(cli, "verify_all", lambda bounds: {"passed": False, "checks": []})
    assert run(capsys, "verify", "--quick")[0] == 3


def test_output_is_byte_stable(capsys):
    a = run(capsys, "deform", "4", "1", "2", "1")[1]
    b = run(capsys, "deform", "4", "1", "2", "1")[1]
    assert a == b


def test_cache_round_trip(tmp_path, capsys):
    path = tmp_path / "graph.json"
    fresh = run(capsys, "markov", "1", "--bound", "300", "--cache", str(path))[1]
    assert path.exists()
    cached = run(capsys, "markov", "1", "--bound", "300", "--cache", str(path))[1]
    assert fresh == cached
    # a snapshot for other parameters is ignored, not reused
    other = run(capsys, "markov", "1", "--bound", "5", "--cache", str(path))[1]
    assert len(json.loads(other)["result"]["nodes"]) == 3


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "manetti", "hj", "expand", "25/14"], capture_output=True, text=True
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["result"]["string"] == [2, 5, 3]
