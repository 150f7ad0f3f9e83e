import csv
import io
import json
import subprocess
import sys


from egstab.cli import main, parse_ints
from egstab.graph6 import decode
from egstab.families import build_h
from egstab.verify.report import strip_timing


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_ints():
    assert parse_ints("9..12") == [9, 10, 11, 12]
    assert parse_ints("2,4..5,9") == [2, 4, 5, 9]


def test_formulas_table(capsys):
    code, out, _ = run_cli(capsys, "formulas", "--table", "h_s", "--k", "9", "--a", "3", "--s", "2",
                           "--n", "9..15")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 7
    assert all(int(r["h_s"]) == 3 * int(r["n"]) - 3 for r in rows)


def test_formulas_skips_out_of_domain(capsys):
    code, out, err = run_cli(capsys, "formulas", "--table", "g_s", "--n", "9..11", "--k", "10",
                             "--s", "2")
    assert code == 0 and len(out.splitlines()) == 3 and "skipped" in err


def test_gen_h(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family", "h", "--n", "12", "--k", "9", "--a", "3")
    lines = out.split()
    assert code == 0 and len(lines) == 1 and decode(lines[0]) == build_h(12, 9, 3)


def test_gen_special_writes_descriptor(tmp_path, capsys):
    out = tmp_path / "f0.g6"
    code, _, _ = run_cli(capsys, "gen", "--family", "F0", "--m", "12", "--k", "12", "--r", "3",
                         "--out", str(out))
    assert code == 0
    assert decode(out.read_text().strip()).n == 12
    desc = (tmp_path / "f0.g6.desc").read_text()
    assert "special=F0" in desc and "type=II" in desc


def test_gen_requires_params(capsys):
    code, _, err = run_cli(capsys, "gen", "--family", "h", "--n", "12")
    assert code == 64 and "--k" in err


def test_solve_ops(tmp_path, capsys):
    src = tmp_path / "in.g6"
    src.write_text("I`~vcOK@_\nDrw\n")
    for op in ("circ", "cliques", "posa"):
        code, out, _ = run_cli(capsys, "solve", "--op", op, "--in", str(src))
        recs = [json.loads(line) for line in out.splitlines()]
        assert code == 0 and [r["index"] for r in recs] == [0, 1]
        assert all({"index", "result", "witness", "microseconds"} <= set(r) for r in recs)
    code, out, _ = run_cli(capsys, "solve", "--op", "circ", "--in", str(src))
    assert json.loads(out.splitlines()[1])["result"] == 5
    code, out, _ = run_cli(capsys, "solve", "--op", "subiso", "--pattern", "Bw", "--in", str(src))
    assert [json.loads(line)["result"] for line in out.splitlines()] == [True, True]
    code, out, _ = run_cli(capsys, "solve", "--op", "disint", "--alpha", "2", "--in", str(src))
    assert json.loads(out.splitlines()[1])["result"] == []


def test_enumerate_counts(capsys):
    assert run_cli(capsys, "enumerate", "--n", "4", "--two-connected", "--count")[1] == "3\n"
    assert run_cli(capsys, "enumerate", "--n", "5", "--two-connected", "--count")[1] == "10\n"
    code, out, _ = run_cli(capsys, "enumerate", "--n", "4")
    assert code == 0 and len(out.split()) == 6


def test_verify_and_rerun_from_config(tmp_path, capsys):
    first = tmp_path / "a.json"
    code, _, err = run_cli(capsys, "verify", "--suite", "kopylov_luo", "--n-max", "7", "--out", str(first))
    assert code == 0 and "clean" in err
    doc = json.loads(first.read_text())
    assert doc["config"]["suite"] == "kopylov_luo" and doc["config"]["n_max"] == 7
    assert "seed" in doc["config"]
    second = tmp_path / "b.json"
    code, _, _ = run_cli(capsys, "verify", "--config", str(first), "--jobs", "2", "--out", str(second))
    assert code == 0
    assert strip_timing(first.read_text()) == strip_timing(second.read_text())


def test_verify_exit_one_on_counterexample(tmp_path, capsys):
    out = tmp_path / "p.json"
    code, _, _ = run_cli(capsys, "verify", "--suite", "prop_paths", "--k", "10", "--out", str(out))
    assert code == 1
    code, _, err = run_cli(capsys, "report", "--in", str(out), "--replay")
    assert code == 1 and "reproduced" in err and "NOT" not in err


def test_verify_search_suite_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "conjecture", "--n-max", "6", "--r", "4..5",
                           "--s", "2")
    assert code == 0 and json.loads(out)["asserting"] is False


def test_verify_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "fan", "--n-max", "6", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "n,r,passes,failures,skips"


def test_usage_and_io_errors(tmp_path, capsys):
    assert run_cli(capsys)[0] == 64
    assert run_cli(capsys, "verify", "--suite", "bogus")[0] == 64
    assert run_cli(capsys, "verify", "--suite", "fan", "--k", "5")[0] == 64
    assert run_cli(capsys, "formulas", "--table", "h_s", "--n", "9..x")[0] == 64
    assert run_cli(capsys, "solve", "--op", "circ", "--in", str(tmp_path / "missing"))[0] == 74
    bad = tmp_path / "bad.g6"
    bad.write_text("not graph6!\n")
    assert run_cli(capsys, "solve", "--op", "circ", "--in", str(bad))[0] == 64


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "egstab.cli", "formulas", "--table", "eg", "--k", "5",
                           "--n", "11"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[1] == "5,11,20"
