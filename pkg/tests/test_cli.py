from __future__ import annotations

import json
import subprocess
import sys

import pytest

from parsewords.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "--t1", "path:lrlr", "--t2", "path:rlrl") == (0, "4\n", "")
    code, out, _ = run(capsys, "count", "--t1", "path:lrlr", "--t2", "path:rlrl", "--json")
    assert json.loads(out) == {"count": 4}


def test_parse(capsys):
    assert run(capsys, "parse", "--tree", "(**)", "--word", "01") == (0, "2(0 1)\n", "")
    code, out, _ = run(capsys, "parse", "--tree", "(**)", "--word", "00")
    assert code == 1
    code, out, _ = run(capsys, "parse", "--tree", "(**)", "--word", "01", "--json")
    assert json.loads(out)["labels"] == {"": 2, "l": 0, "r": 1}


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--t1", "path:lrlr", "--t2", "path:rlrl")
    assert code == 0 and len(out.split()) == 4
    code, stream, _ = run(capsys, "enumerate", "--t1", "path:lrlr", "--t2", "path:rlrl", "--engine", "stream")
    assert stream == out
    code, out, _ = run(capsys, "enumerate", "--t1", "path:ll", "--t2", "path:rr", "--json")
    assert json.loads(out) == {"class": "0112"}


def test_families(capsys):
    code, out, _ = run(capsys, "families", "--theorem", "comb-comb", "--params", "5", "--check")
    assert code == 0 and out.splitlines()[0] == "01110" and out.splitlines()[-1] == "PASS"
    code, out, _ = run(capsys, "families", "--theorem", "a", "--params", "2", "3", "--check", "--json")
    assert json.loads(out) == {"brute_force": 5, "closed_form": 5, "params": [2, 3], "status": "PASS",
                               "theorem": "a"}
    code, out, _ = run(capsys, "families", "--theorem", "comb-general", "--tree", "path:lrlr", "--check")
    assert code == 0 and out.startswith("2\n")
    code, _, err = run(capsys, "families", "--theorem", "turn-turn", "--params", "3")
    assert code == 2 and "error" in err


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--t1", "((**)(**))", "--t2", "(*(*(**)))", "--trace")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("bottom-bottom") and len(lines[-1]) == 4
    code, out, _ = run(capsys, "reduce", "--t1", "path:ll", "--t2", "path:rr", "--json")
    assert json.loads(out.splitlines()[-1])["verified"] is True


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "comb-comb", "--max-n", "12")
    assert code == 0 and out.endswith("status: PASS\n")
    code, out, _ = run(capsys, "verify", "vector-bijection", "--max-n", "4", "--json")
    assert code == 0 and all(json.loads(line)["status"] == "PASS" for line in out.splitlines())
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "u00v" in out and "root-parity" in out


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "u00v", "--max-n", "6")
    assert code == 0 and "status: PASS" in out
    code, _, err = run(capsys, "conjecture", "u00v", "--space", "binary")
    assert code == 2 and "binary" in err


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--n", "4")
    assert out.split() == ["(*(*(**)))", "(*((**)*))", "((**)(**))", "((*(**))*)", "(((**)*)*)"]
    code, out, _ = run(capsys, "gen", "--n", "6", "--space", "path", "--count")
    assert out == "16\n"


@pytest.mark.parametrize("argv", [
    ["count", "--t1", "(**", "--t2", "*"],
    ["count", "--t1", "(**)", "--t2", "*"],
    ["verify", "bogus"],
    ["verify", "total-ambiguity", "--max-n", "13"],
    ["verify"],
    ["frobnicate"],
    ["count"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "parsewords", "count", "--t1", "path:ll", "--t2", "path:rr"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"
