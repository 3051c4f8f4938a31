import csv
import io
import json
import subprocess
import sys

import pytest

from memotab.cli import CSV_HEADER, BenchRecord, loglog_slope, main
from memotab.dsl import builtin_text

SENTENCE = ["Sandy", "'s", "professor", "knows", "Kim"]


def cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_recognize(capsys):
    assert cli(capsys, "recognize", "--grammar", "johnson", *SENTENCE)[:2] == (0, "accepted\n")
    assert cli(capsys, "recognize", "--grammar", "johnson", "Kim")[:2] == (1, "rejected\n")
    assert cli(capsys, "recognize", "--grammar", "sml")[:2] == (0, "accepted\n")


def test_recognize_from_files(capsys, tmp_path):
    g = tmp_path / "j.g"
    g.write_text(builtin_text("johnson"), encoding="utf-8")
    inp = tmp_path / "in.txt"
    inp.write_text(" ".join(SENTENCE) + "\n", encoding="utf-8")
    assert cli(capsys, "recognize", "-g", str(g), "--input", str(inp))[:2] == (0, "accepted\n")


def test_errors_exit_2(capsys, tmp_path):
    assert cli(capsys, "recognize", "-g", "nosuch")[0] == 2
    bad = tmp_path / "bad.g"
    bad.write_text("S = X ;", encoding="utf-8")
    code, _, err = cli(capsys, "recognize", "-g", str(bad))
    assert code == 2 and "undefined nonterminal" in err
    assert cli(capsys, "recognize", "-g", "sm", "--input", str(tmp_path / "missing"))[0] == 2
    assert cli(capsys, "demo", "fib", "x")[0] == 2
    assert cli(capsys, "demo", "fib", "-4")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["bench", "--lengths", "1,x"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_chart_johnson(capsys):
    code, out, _ = cli(capsys, "chart", "-g", "johnson", *SENTENCE)
    doc = json.loads(out)
    assert code == 0 and doc["accepted"] is True
    np_full = [e for e in doc["charts"]["np"] if e["key"] == 0][0]
    assert np_full["key_remainder"] == SENTENCE
    assert sorted(np_full["result_remainders"]) == sorted([["knows", "Kim"], ["'s", "professor", "knows", "Kim"]])


def test_chart_sml_empty(capsys):
    doc = json.loads(cli(capsys, "chart", "-g", "sml", "--compact")[1])
    assert doc["charts"] == {"sml": [{"key": 0, "key_remainder": [], "results": [0], "result_remainders": [[]]}]}


def test_chart_sm_three(capsys):
    doc = json.loads(cli(capsys, "chart", "-g", "sm", "a", "a", "a")[1])
    assert [e["results"] for e in doc["charts"]["sm"] if e["key"] == 0] == [[0, 1, 2, 3]]


def test_chart_policy_flag(capsys):
    fifo = json.loads(cli(capsys, "chart", "-g", "smml", "a", "a", "a", "a")[1])
    rnd = json.loads(cli(capsys, "chart", "-g", "smml", "--policy", "random", "--seed", "9", "a", "a", "a", "a")[1])
    assert fifo == rnd


def test_bench_csv(capsys):
    code, out, err = cli(capsys, "bench", "--grammars", "sm,sml,smml", "--lengths", "0,4,8,12", "--reps", "1")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert tuple(rows[0]) == CSV_HEADER
    assert len(rows) == 13
    assert all(r[3] == "true" for r in rows[1:])
    assert all(float(r[2]) >= 0 for r in rows[1:])
    assert err.count("slope") == 3


def test_bench_table(capsys):
    code, out, _ = cli(capsys, "bench", "--grammars", "sm", "--lengths", "2,4,8", "--reps", "1", "--format", "table")
    assert code == 0 and "log-log slope sm" in out


def test_loglog_slope():
    recs = [BenchRecord("g", n, n ** 3 * 1e-6, True) for n in (10, 20, 40, 0)]
    assert loglog_slope(recs) == pytest.approx(3.0)
    assert loglog_slope(recs[:2]) is None


def test_demo(capsys):
    assert cli(capsys, "demo", "path", "a")[1] == "b c\n"
    assert cli(capsys, "demo", "fib", "0")[1] == "0\n"
    assert cli(capsys, "demo", "fib", "20")[1] == "6765\n"
    assert cli(capsys, "demo", "path", "x", "--edges", "x:y,y:x")[1].split() == ["y", "x"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "memotab", "demo", "path", "a"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "b c\n"
