import json
import subprocess
import sys

import pytest

from splitcycles.betti import BettiTable
from splitcycles.cli import bundled_names, main
from conftest import C4, EXAMPLE1, EXAMPLE2

# Published grids, transcribed cell by cell: header, rows, total.
EX1_TABLES = {
    "I": [["1", "2", "3"], ["1:", "6", "8", "3"], ["total:", "6", "8", "3"]],
    "J": [["1", "2", "3"], ["1:", "4", "4", "1"], ["total:", "4", "4", "1"]],
    "K": [["1", "2"], ["1:", "2", "1"], ["total:", "2", "1"]],
    "JK": [["1", "2"], ["1:", "-", "-"], ["2:", "3", "2"], ["total:", "3", "2"]],
}
EX2_TABLES = {
    "I": [["1", "2", "3", "4"], ["1:", "8", "12", "5", "-"], ["2:", "-", "2", "4", "2"],
          ["total:", "8", "14", "9", "2"]],
    "J": [["1", "2", "3"], ["1:", "4", "4", "1"], ["total:", "4", "4", "1"]],
    "K": [["1", "2", "3", "4"], ["1:", "4", "2", "-", "-"], ["2:", "-", "4", "4", "1"],
          ["total:", "4", "6", "4", "1"]],
    "JK": [["1", "2", "3"], ["1:", "-", "-", "-"], ["2:", "6", "6", "-"], ["3:", "-", "-", "1"],
           ["total:", "6", "6", "1"]],
}


def grid(text):
    return [line.split() for line in text.splitlines()]


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in (("ex1", EXAMPLE1), ("ex2", EXAMPLE2), ("c4", C4), ("pendant", C4 + "u1 w\n"),
                       ("bad", "u1 u2 u3\n"), ("empty", "# nothing\n"), ("loop", "a a\n"),
                       ("two", C4 + "u1 w\nw x\nx y\ny u3\n")):
        p = tmp_path / f"{name}.edges"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- cycles ----------------------------------------------------------------------

def test_cycles(capsys, files):
    assert run(capsys, "cycles", files["ex2"]) == (0, "(u1,u2,u3,u4)\n", "")
    code, out, _ = run(capsys, "cycles", files["ex2"], "--format", "json")
    assert json.loads(out) == [["u1", "u2", "u3", "u4"]]


def test_cycles_edgeless(capsys, files):
    assert run(capsys, "cycles", files["empty"])[:2] == (0, "")


def test_malformed_inputs(capsys, files, tmp_path):
    for name in ("bad", "loop"):
        code, out, err = run(capsys, "cycles", files[name])
        assert code == 2 and out == "" and err.startswith("error:")
    assert run(capsys, "cycles", str(tmp_path / "missing.edges"))[0] == 2


def test_duplicate_edge_warning(capsys, tmp_path):
    p = tmp_path / "dup.edges"
    p.write_text(C4 + "u2 u1\n")
    code, out, err = run(capsys, "cycles", str(p))
    assert code == 0 and out == "(u1,u2,u3,u4)\n" and "warning:" in err


# -- split -----------------------------------------------------------------------

def test_split_verdicts(capsys, files):
    code, out, _ = run(capsys, "split", files["ex2"], "--cycle", "u1,u2,u3,u4", "--search")
    assert code == 0 and "verdict: no-splitting-function" in out
    assert "lcm(psi(S)) = u1*u2*u3*u4*w1*w2" in out
    assert "verdict: hypothesis-fails-but-splitting-found" in run(capsys, "split", files["ex1"], "--search")[1]
    assert "verdict: certified-splitting" in run(capsys, "split", files["pendant"])[1]
    assert "verdict: not-checked" in run(capsys, "split", files["ex1"])[1]


def test_split_json(capsys, files):
    code, out, _ = run(capsys, "split", files["pendant"], "--format", "json")
    doc = json.loads(out)
    assert doc["verdict"] == "certified-splitting"
    assert doc["function"] == [["u1*u2*w", "u1*u2", "u1*w"], ["u1*u4*w", "u1*u4", "u1*w"]]


def test_split_cycle_errors(capsys, files):
    assert run(capsys, "split", files["two"])[0] == 2  # several cycles, none chosen
    assert run(capsys, "split", files["ex2"], "--cycle", "u1,u3,u2,u4")[0] == 2
    assert run(capsys, "split", files["ex2"], "--cycle", "u1,u2,zz,u4")[0] == 2


def test_split_subset_cap(capsys, tmp_path):
    p = tmp_path / "wedge.edges"
    p.write_text(C4 + "w1 w2\n")
    code, _, err = run(capsys, "split", str(p), "--max-subsets", "2")
    assert code == 3 and "cap" in err


# -- betti ------------------------------------------------------------------------

def test_betti_tables(capsys, files):
    assert grid(run(capsys, "betti", files["ex1"])[1]) == EX1_TABLES["I"]
    assert grid(run(capsys, "betti", files["c4"])[1])[-1] == ["total:", "4", "4", "1"]
    code, out, _ = run(capsys, "betti", "--ideal", "u1*u2*w1, u2*u3*w1, u1*u4*w1")
    assert grid(out) == EX1_TABLES["JK"]


def test_betti_json_round_trip(capsys, files):
    code, out, _ = run(capsys, "betti", files["ex2"], "--format", "json")
    doc = json.loads(out)
    assert doc["totals"] == [8, 14, 9, 2]
    assert BettiTable.from_json(doc).to_json() == doc


def test_betti_errors(capsys, files):
    assert run(capsys, "betti", files["ex2"], "--cap", "5")[0] == 3
    assert run(capsys, "betti")[0] == 2
    assert run(capsys, "betti", "--ideal", "u1^2*u2")[0] == 2
    assert run(capsys, "betti", files["c4"], "--ideal", "a*b")[0] == 2


def test_betti_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(C4))
    assert grid(run(capsys, "betti", "-")[1]) == EX1_TABLES["J"]


# -- check-ek --------------------------------------------------------------------

def test_check_ek(capsys, files):
    out = run(capsys, "check-ek", files["ex1"])[1]
    assert out.count("✓") == 4 and "✗" not in out
    out = run(capsys, "check-ek", files["ex2"])[1]
    marks = {line.split()[0]: line.split()[-1] for line in out.splitlines()[2:-1]}
    assert marks == {"1": "✓", "2": "✗", "3": "✗", "4": "✓"}
    assert "✗" not in run(capsys, "check-ek", files["pendant"])[1]


def test_check_ek_json(capsys, files):
    doc = json.loads(run(capsys, "check-ek", files["ex2"], "--format", "json")[1])
    assert doc["overall"] is False
    assert [c["i"] for c in doc["columns"] if not c["equal"]] == [1, 2]


# -- wheel ----------------------------------------------------------------------

@pytest.mark.parametrize("k", ["2", "3"])
def test_wheel_verify(capsys, k):
    code, out, _ = run(capsys, "wheel", "--k", k, "--verify")
    assert code == 0 and out.endswith("match\n") and "mismatch" not in out


def test_wheel_json(capsys):
    doc = json.loads(run(capsys, "wheel", "--k", "2", "--verify", "--format", "json")[1])
    assert doc["match"] is True and doc["formula"] == doc["oracle"]


def test_wheel_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["wheel", "--k", "1"])
    assert exc.value.code == 2


# -- analyze -------------------------------------------------------------------

@pytest.mark.parametrize("name,tables", [("example1", EX1_TABLES), ("example2", EX2_TABLES)])
def test_analyze_reproduces_published_tables(capsys, name, tables):
    code, out, _ = run(capsys, "analyze", f"bundled:{name}", "--search")
    assert code == 0
    (entry,) = json.loads(out)["cycles"]
    for key, expected in tables.items():
        assert grid(entry["tables"][key]) == expected, key


def test_analyze_text(capsys):
    out = run(capsys, "analyze", "bundled:c4_pendant", "--format", "text")[1]
    assert "certified-splitting" in out and "EK ✓" in out


def test_bundled_inputs(capsys):
    assert {"example1", "example2", "c4_pendant", "spoke_deleted_wheel_k2",
            "spoke_deleted_wheel_k3"} <= set(bundled_names())
    assert run(capsys, "cycles", "bundled:nope")[0] == 2
    out = run(capsys, "cycles", "bundled:spoke_deleted_wheel_k3")[1]
    assert "(u1,u2,u3,u4,u5,u6)" in out


def test_output_is_lf_terminated_utf8(files):
    res = subprocess.run([sys.executable, "-m", "splitcycles.cli", "check-ek", files["ex2"]],
                         capture_output=True)
    assert res.returncode == 0
    text = res.stdout.decode("utf-8")
    assert text.endswith("\n") and "\r" not in text and "✗" in text
