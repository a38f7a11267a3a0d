import csv
import json

import pytest

from sepcurves.cli import main


def test_bad_genus_is_usage_error(tmp_path, capsys):
    assert main(["table", "--genus", "7", "--out", str(tmp_path / "t.csv")]) == 2
    assert "outside" in capsys.readouterr().err


def test_missing_arguments(tmp_path):
    assert main(["table", "--out", str(tmp_path / "t.csv")]) == 2
    assert main([]) == 2


def test_unknown_suite(tmp_path):
    assert main(["verify", "--genus", "3", "--suite", "nope",
                 "--out", str(tmp_path / "r.json")]) == 2


def test_bad_jobs(tmp_path):
    assert main(["verify", "--genus", "3", "--suite", "chain", "--jobs", "0",
                 "--out", str(tmp_path / "r.json")]) == 2


def test_table_csv_and_png(tmp_path):
    out = tmp_path / "xs.csv"
    assert main(["table", "--genus", "3", "--set", "Xs", "--out", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert len(rows) == 25 and rows[0][0] == "name"
    assert all(rows[i][i] == "0" for i in range(1, 25))
    assert out.with_suffix(".png").read_bytes()[:4] == b"\x89PNG"


def test_table_json_no_plots(tmp_path):
    out = tmp_path / "xs.json"
    assert main(["table", "--genus", "3", "--set", "Xs", "--format", "json",
                 "--no-plots", "--out", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["set"] == "Xs" and len(d["table"]) == 24
    assert not out.with_suffix(".png").exists()


def test_homology(tmp_path):
    out = tmp_path / "h.json"
    assert main(["homology", "--genus", "3", "--set", "Xs", "--out", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["f_vector"] == [24, 60, 16] and d["euler"] == -20 and d["betti"] == [1, 21, 0]
    assert out.with_suffix(".png").exists()


def test_build(tmp_path):
    out = tmp_path / "y.json"
    assert main(["build", "--genus", "3", "--out", str(out)]) == 0
    assert len(json.loads(out.read_text())["curves"]) == 40


def test_export_dot(tmp_path):
    out = tmp_path / "g.dot"
    assert main(["export-dot", "--genus", "3", "--set", "Xs", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith('graph "Xs_g3"') and text.count(" -- ") == 60
    assert out.with_suffix(".png").exists()


def test_verify_pass_and_sidecar(tmp_path):
    out = tmp_path / "chain.json"
    assert main(["verify", "--genus", "3", "--suite", "chain", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["status"] == "pass"
    timing = json.loads((tmp_path / "chain.timing.json").read_text())
    assert timing["suite"] == "chain" and "seconds" in timing
    assert "seconds" not in out.read_text()
    assert out.with_suffix(".png").exists()


def test_verify_failure_exit_code(tmp_path):
    # the relation s r s = r^-1 does not hold on names, so the suite fails
    out = tmp_path / "rig.json"
    assert main(["verify", "--genus", "3", "--suite", "rigidity", "--no-plots",
                 "--out", str(out)]) == 1
    rep = json.loads(out.read_text())
    failing = [c["id"] for c in rep["checks"] if c["status"] == "fail"]
    assert failing == ["rigidity.relation.srs"]
    assert all("witness" in c for c in rep["checks"] if c["status"] == "fail")


def test_verify_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out, jobs in ((a, "1"), (b, "2")):
        assert main(["verify", "--genus", "3", "--suite", "families", "--jobs", jobs,
                     "--no-plots", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()
