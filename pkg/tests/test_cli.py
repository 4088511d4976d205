import json
import subprocess
import sys

import pytest

from projrich.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,expected", [
    (["--family", "typeA", "--k", "1", "--n", "3"], "1,3,3"),
    (["--family", "typeC", "--n", "2", "--at-one"], "13"),
    (["--family", "typeB", "--n", "1", "--rank-poly"], "2,1"),
    (["--family", "typeD", "--n", "2", "--rank-poly"], "4,4,1"),
    (["--family", "typeA", "--k", "2", "--n", "4", "--at-one"], "33"),
    (["--family", "brute", "--type", "A", "--rank", "2", "--coweight", "1,0"], "1,3,3"),
])
def test_genfun_plain(capsys, argv, expected):
    code, out, _ = run(capsys, "genfun", *argv)
    assert code == 0 and out.strip() == expected


def test_genfun_json(capsys):
    code, out, _ = run(capsys, "genfun", "--family", "brute", "--type", "B", "--rank", "2",
                       "--coweight", "1,0", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["duality"] and d["F"] == [1, 3, 5, 4] and d["F(1)"] == 13


def test_genfun_csv(capsys):
    code, out, _ = run(capsys, "genfun", "--family", "typeA", "--k", "1", "--n", "3", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("family") and lines[1].startswith("typeA")


def test_genfun_input_errors(capsys):
    assert run(capsys, "genfun", "--family", "typeA", "--n", "3")[0] == 2
    assert run(capsys, "genfun", "--family", "typeA", "--k", "3", "--n", "3")[0] == 2
    assert run(capsys, "genfun", "--family", "typeE")[0] == 2


def test_poset_dump(capsys):
    code, out, _ = run(capsys, "poset", "--type", "A", "--rank", "2", "--coweight", "1,0")
    d = json.loads(out)
    assert code == 0
    assert len(d["elements"]) == 7 and d["admissible"]["size"] == 7
    assert d["J"] == [2] and d["lambda"] == [1, 0]
    assert d["diagnostics"]["thin"] and d["diagnostics"]["eulerian"]
    assert set(d["elements"][0]) == {"x_word", "y_word", "grade"}


def test_poset_trivial(capsys):
    code, out, _ = run(capsys, "poset", "--type", "A", "--rank", "2", "--coweight", "0,0")
    assert code == 0 and len(json.loads(out)["elements"]) == 1


def test_poset_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["poset", "--type", "B", "--rank", "2", "--coweight", "0,1", "--out", str(p)]) == 0
    assert a.read_text() == b.read_text()


@pytest.mark.parametrize("argv", [
    ["poset", "--type", "A", "--rank", "2"],
    ["poset", "--type", "A", "--rank", "2", "--coweight", "1,0,0"],
    ["poset", "--type", "A", "--rank", "2", "--coweight=-1,1"],
    ["poset", "--type", "A", "--rank", "2", "--coweight", "a,b"],
    ["poset", "--type", "D", "--rank", "2", "--coweight", "1,0"],
    ["verify", "--suite", "combinatorics", "--type", "A", "--rank", "2"],
])
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("suite", ["combinatorics", "ktheory", "cohomology", "diagnostics"])
def test_verify_passes(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--type", "A", "--rank", "2", "--coweight", "1,0")
    d = json.loads(out)
    assert code == 0 and d["passed"]


def test_injected_fault_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ktheory", "--type", "A", "--rank", "2",
                       "--coweight", "1,0", "--inject-fault", "sign-flip")
    d = json.loads(out)
    assert code == 1 and not d["passed"] and d["reports"][0]["failures"]


def test_fault_flag_is_hidden(capsys):
    assert main(["verify", "--help"]) == 0
    assert "inject" not in capsys.readouterr().out


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "words", "--type", "A", "--rank", "2",
                       "--max-len", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "theorem,instance,n_checked,n_failed,passed"


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "projrich.cli", "genfun", "--family", "typeA",
                          "--k", "1", "--n", "3"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "1,3,3"
