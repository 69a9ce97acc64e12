import json
import subprocess
import sys

import pytest

from pcg import cli
from pcg.closedform import FormulaResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def analyze_json(capsys, *argv):
    code, out, _ = run(capsys, "analyze", *argv, "--format", "json")
    return code, json.loads(out), out


def test_analyze_cyclic30(capsys):
    code, rep, _ = analyze_json(capsys, "cyclic", "30")
    assert code == 0
    assert rep["schema"] == "pcg/1"
    assert rep["alpha"]["value"] == 16
    assert rep["alpha"]["method"] == "formula"
    assert rep["split"]["verdict"] == "NotSplit"
    assert rep["split"]["witness_orders"] == [6, 10]
    assert rep["agreement"] == {"formula_vs_solver": True, "bound_le_alpha": True}


def test_analyze_dicyclic3(capsys):
    code, rep, _ = analyze_json(capsys, "dicyclic", "3")
    assert code == 0 and rep["alpha"]["value"] == 6


def test_analyze_oracle_z4(capsys):
    code, rep, _ = analyze_json(capsys, "cyclic", "4", "--method", "oracle")
    assert code == 0
    assert rep["alpha"] == {"value": 2, "method": "oracle", "witness": {"size": 2, "orders": [4]}}


def test_analyze_auto_falls_back_to_quotient(capsys):
    code, rep, _ = analyze_json(capsys, "cyclic", "900")
    assert rep["alpha"]["method"] == "quotient"
    assert rep["alpha"]["value"] == 796
    assert rep["formula"] is None
    assert rep["bounds"] == {"sp_lower_bound": 768, "cyclic_lower_bound": 768}
    assert rep["agreement"]["formula_vs_solver"] is None


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "cyclic", "30")
    assert code == 0
    assert "alpha        16" in out
    assert "NotSplit witness orders 6, 10" in out


def test_analyze_orders_file(tmp_path, capsys):
    path = tmp_path / "q8.txt"
    path.write_text("1\n2\n4\n4\n4\n4\n4\n4\n")
    code, rep, _ = analyze_json(capsys, "--orders-file", str(path))
    assert code == 0
    assert rep["alpha"]["value"] == 6
    assert rep["split"]["verdict"] == "PrimePowerTail"


def test_json_round_trip(capsys):
    for argv in (("cyclic", "30"), ("semidihedral", "5"), ("cyclic", "900"), ("dihedral", "7", "--method", "oracle")):
        _, rep, raw = analyze_json(capsys, *argv)
        assert cli.dump_json(json.loads(raw)) == raw


def test_identical_invocations_identical_bytes(capsys):
    first = run(capsys, "analyze", "cyclic", "360", "--format", "json")[1]
    second = run(capsys, "analyze", "cyclic", "360", "--format", "json")[1]
    assert first == second


def test_oracle_and_quotient_agree(capsys):
    for fam, top in (("cyclic", 120), ("dihedral", 40), ("dicyclic", 20), ("semidihedral", 12)):
        low = 1 if fam == "cyclic" else 3
        for n in range(low, top + 1, 3):
            _, a, _ = analyze_json(capsys, fam, str(n), "--method", "oracle")
            _, b, _ = analyze_json(capsys, fam, str(n), "--method", "quotient")
            assert a["alpha"]["value"] == b["alpha"]["value"], (fam, n)


def test_export_edges(capsys):
    code, out, _ = run(capsys, "export", "cyclic", "6", "--format", "edges")
    assert code == 0
    assert len([l for l in out.splitlines() if not l.startswith("#")]) == 14
    code, out, _ = run(capsys, "export", "dihedral", "3", "--format", "edges")
    assert len([l for l in out.splitlines() if not l.startswith("#")]) == 15


def test_export_dot_to_file(tmp_path, capsys):
    target = tmp_path / "z3.dot"
    code, out, _ = run(capsys, "export", "cyclic", "3", "--format", "dot", "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.count(" -- ") == 3
    run(capsys, "export", "cyclic", "3", "--format", "dot", "--out", str(tmp_path / "again.dot"))
    assert (tmp_path / "again.dot").read_bytes() == target.read_bytes()


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "cyclic", "900", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["sp_lower_bound"] == 768 and data["cyclic_lower_bound"] == 768
    code, out, _ = run(capsys, "bound", "cyclic", "1155")
    assert "lower bound 900" in out


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "cyclic", "4..200", "--checks", "formula,bound")
    assert code == 0
    assert "FAIL" not in out
    code, out, _ = run(capsys, "verify", "dihedral", "3..40", "--checks", "joins")
    assert code == 0 and out.count("PASS") == 38
    code, out, _ = run(capsys, "verify", "cyclic", "900..900", "--checks", "bound")
    assert code == 0 and "bound 768 <= alpha 796" in out


def test_verify_all_checks_small(capsys):
    for fam in ("cyclic", "dihedral", "dicyclic", "semidihedral"):
        code, out, _ = run(capsys, "verify", fam, "3..14", "--checks", "formula,bound,split,idmax,joins")
        assert code == 0, out


# -- exit codes --------------------------------------------------------------


def test_exit_1_on_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(cli.cf, "alpha_exact_formula", lambda spec: FormulaResult(0, "Exact", "broken"))
    code, out, _ = run(capsys, "verify", "cyclic", "4..6", "--checks", "formula")
    assert code == 1
    assert "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze"],
        ["analyze", "cyclic"],
        ["analyze", "cyclic", "0"],
        ["analyze", "dihedral", "2"],
        ["analyze", "klein", "4"],
        ["analyze", "cyclic", "x"],
        ["analyze", "cyclic", "60", "--method", "formula"],
        ["analyze", "cyclic", "600", "--method", "oracle"],
        ["verify", "cyclic", "4-10"],
        ["verify", "cyclic", "10..4"],
        ["verify", "cyclic", "4..10", "--checks", "speed"],
        ["export", "cyclic", "6000"],
        ["frobnicate"],
    ],
)
def test_exit_2_on_usage(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_exit_2_bad_orders_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n1\n")
    assert run(capsys, "analyze", "--orders-file", str(bad))[0] == 2


def test_exit_3_on_timeout(capsys):
    code, out, _ = run(capsys, "analyze", "cyclic", "420", "--method", "oracle",
                       "--timeout", "0.000001", "--format", "json")
    assert code == 3
    rep = json.loads(out)
    assert rep["incomplete"] is True
    assert rep["alpha"]["value"] is None
    assert rep["alpha"]["best_found"] >= 0


def test_exit_4_on_io(tmp_path, capsys):
    assert run(capsys, "analyze", "--orders-file", str(tmp_path / "missing.txt"))[0] == 4
    out = tmp_path / "no" / "such" / "dir" / "g.dot"
    assert run(capsys, "export", "cyclic", "3", "--out", str(out))[0] == 4


def test_max_order_env(monkeypatch, capsys):
    monkeypatch.setenv("PCG_MAX_ORDER", "10")
    assert run(capsys, "analyze", "cyclic", "12", "--method", "oracle")[0] == 2
    assert run(capsys, "analyze", "cyclic", "12", "--method", "oracle", "--max-order", "12")[0] == 0


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pcg.cli", "analyze", "cyclic", "30", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["alpha"]["value"] == 16
