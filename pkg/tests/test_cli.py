import io
import json
import os
import subprocess
import sys

import pytest

from divstr.cli import RunReport, emit_report, main

from helpers import PAIR, PAIR_LCS


def run(*argv):
    out = io.StringIO()
    code = main(["--no-timing", *argv], out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    pair = tmp_path / "pair.txt"
    pair.write_text("alphabet A B C D E\n" + "\n".join(PAIR) + "\n")
    six = tmp_path / "six.txt"
    six.write_text("alphabet A B C D E\n" + "\n".join(PAIR_LCS) + "\n")
    return tmp_path, pair, six


def test_lcs_dag_then_enumerate(files):
    tmp, pair, _ = files
    dag = tmp / "g.dag"
    code, out = run("lcs-dag", "--strings", str(pair), "--out", str(dag))
    assert code == 0 and "R 5" in out
    code, out = run("enumerate", "--dag", str(dag))
    assert code == 0 and out.split() == PAIR_LCS


def test_exact_yes_and_no(files):
    _, _, six = files
    code, out = run("exact", "--mode", "maxmin", "--k", "2", "--delta", "3", "--strings", str(six), "--witness")
    lines = out.splitlines()
    assert code == 0 and lines[:2] == ["DECISION YES", "ACHIEVED 3"]
    assert lines[2:4] == ["ABADD", "ABBEE"]
    assert lines[-1].startswith("STATS states=")
    code, out = run("exact", "--mode", "maxmin", "--k", "3", "--delta", "2", "--strings", str(six))
    assert code == 1 and out.startswith("DECISION NO")


def test_exact_optimize_json(files):
    _, _, six = files
    code, out = run("--format", "json", "exact", "--mode", "maxsum", "--k", "3", "--optimize",
                    "--strings", str(six))
    rec = json.loads(out)
    assert code == 0 and rec["value"] == "7" and rec["decision"] == "YES"
    assert {"decision", "value", "witness", "stats"} <= rec.keys()


def test_ptas_output(files):
    _, _, six = files
    code, out = run("ptas", "--k", "3", "--eps", "0.5", "--strings", str(six))
    lines = out.splitlines()
    assert code == 0 and lines[0] == "VALUE 7" and len(lines[1:4]) == 3


def test_fpt_output(files):
    _, _, six = files
    code, out = run("fpt", "--mode", "maxmin", "--k", "2", "--delta", "3", "--strings", str(six))
    assert code == 0 and "repetitions=1" in out
    code, out = run("fpt", "--mode", "maxmin", "--k", "3", "--delta", "2", "--reps", "3", "--strings", str(six))
    assert code == 1


def test_output_is_reproducible(files):
    _, _, six = files
    args = ("ptas", "--k", "4", "--eps", "0.9", "--seed", "3", "--strings", str(six))
    assert run(*args) == run(*args)


def test_validate_reports_inconsistent_depth(tmp_path, capsys):
    bad = tmp_path / "bad.dag"
    bad.write_text("dag 2\nalphabet a b\nvertex s\nvertex x\nvertex t\n"
                   "edge s a x\nedge x b t\nedge s b t\nsource s\nsink t\n")
    code, _ = run("validate", "--dag", str(bad))
    assert code == 2
    assert "inconsistent-depth" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert run("exact", "--bogus")[0] == 2
    assert "usage" in capsys.readouterr().err
    assert run("frobnicate")[0] == 2


def test_missing_file_is_input_error(tmp_path):
    assert run("enumerate", "--strings", str(tmp_path / "nope.txt"))[0] == 2


def test_reductions(tmp_path):
    src = tmp_path / "m.3dm"
    src.write_text("n 2\n1 1 1\n2 2 2\n1 2 2\n")
    out_file = tmp_path / "m.txt"
    code, out = run("reduce", "3dm", "--in", str(src), "--out", str(out_file))
    assert code == 0 and "DELTA_MIN 3" in out
    code, _ = run("exact", "--mode", "maxmin", "--k", "2", "--delta", "3", "--strings", str(out_file))
    assert code == 0
    assert run("oracle", "3dm", "--in", str(src))[0] == 0

    graph = tmp_path / "g.txt"
    graph.write_text("n 3\n1 2\n2 3\n")
    code, out = run("reduce", "clique", "--in", str(graph), "--k", "3", "--out", str(tmp_path / "c.txt"))
    assert code == 0 and "DELTA 3" in out
    assert run("exact", "--mode", "maxmin", "--k", "3", "--delta", "3", "--strings", str(tmp_path / "c.txt"))[0] == 1
    assert run("oracle", "clique", "--in", str(graph), "--k", "3")[0] == 1


def test_lcs_encode_round_trip(tmp_path):
    src = tmp_path / "l.txt"
    src.write_text("alphabet 0 1\n01\n10\n11\n")
    enc = tmp_path / "enc.txt"
    code, out = run("reduce", "lcs-encode", "--in", str(src), "--out", str(enc), "--k", "2", "--delta", "1",
                    "--stretch", "auto")
    assert code == 0 and "DELTA_SHIFTED 19" in out
    assert enc.read_text().startswith("# DELTA_SHIFTED 19")
    dag = tmp_path / "enc.dag"
    assert run("lcs-dag", "--strings", str(enc), "--out", str(dag))[0] == 0
    code, out = run("enumerate", "--dag", str(dag))
    assert len(out.splitlines()) == 3
    assert run("exact", "--mode", "maxmin", "--k", "2", "--delta", "19", "--dag", str(dag))[0] == 0
    assert run("exact", "--mode", "maxmin", "--k", "3", "--delta", "20", "--dag", str(dag))[0] == 1


def test_oracle_subcommands(files, tmp_path):
    _, pair, six = files
    code, out = run("oracle", "diverse", "--strings", str(six), "--k", "3", "--mode", "maxsum", "--delta", "7")
    assert code == 0 and "OPTIMUM 7" in out
    code, out = run("oracle", "lcs", "--strings", str(pair))
    assert code == 0 and out.split()[2:8] == PAIR_LCS
    ref = tmp_path / "ref.txt"
    ref.write_text("alphabet A B C D E\nABADD\n")
    code, out = run("oracle", "farthest", "--strings", str(six), "--ref", str(ref))
    assert code == 0 and out.splitlines()[:2] == ["VALUE 3", "ABBEE"]


def test_budget_exit_code(files, monkeypatch):
    _, _, six = files
    monkeypatch.setenv("DIVSTR_BUDGET_MS", "0")
    assert run("oracle", "diverse", "--strings", str(six), "--k", "6", "--mode", "maxsum")[0] == 3


def test_emit_report_defaults():
    text = emit_report(RunReport("exact", decision=False), timing=False)
    assert text == "DECISION NO\nSTATS states=0\n"


def test_console_script(files):
    _, _, six = files
    proc = subprocess.run([sys.executable, "-m", "divstr.cli", "--no-timing", "exact", "--mode", "maxmin",
                           "--k", "2", "--delta", "3", "--strings", str(six)],
                          capture_output=True, text=True, env={**os.environ})
    assert proc.returncode == 0 and proc.stdout.startswith("DECISION YES")
