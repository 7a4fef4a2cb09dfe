from __future__ import annotations

import csv
import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from aeskit import graph6
from aeskit.cli import CSV_HEADER, run
from aeskit.constructions import blowup
from aeskit.graph import complete_graph, cycle_graph
from aeskit.reports import ReportEnvelope, schema
from aeskit.thresholds import Mode, threshold

GOLDEN = Path(__file__).parent / "golden"
VOLATILE = {"wall_time", "backend", "in", "out", "csv"}


def _stable(obj):
    if isinstance(obj, dict):
        return {k: _stable(v) for k, v in obj.items() if k not in VOLATILE and k != "timing"}
    if isinstance(obj, list):
        return [_stable(v) for v in obj]
    return obj


def _call(capsys, argv):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def _report(capsys, argv, expect=0):
    code, out, err = _call(capsys, argv)
    assert code == expect, err
    doc = json.loads(out)
    jsonschema.validate(doc, schema())
    assert ReportEnvelope.from_json(out).to_dict() == doc
    return doc


@pytest.fixture
def c5_blowup(tmp_path):
    p = tmp_path / "c5.g6"
    graph6.write_file(str(p), [blowup(cycle_graph(5), [3] * 5)])
    return str(p)


def _golden(name, doc):
    path = GOLDEN / f"{name}.json"
    got = _stable(doc)
    if os.environ.get("AESKIT_REGEN_GOLDEN"):
        path.write_text(json.dumps(got, indent=2, sort_keys=True) + "\n")
    assert got == json.loads(path.read_text())


def test_construct_audit(capsys, tmp_path):
    out = tmp_path / "g.g6"
    doc = _report(capsys, ["construct", "--family", "clique", "--n", "15", "--r", "2", "--delta-max", "10", "--audit", "--out", str(out)])
    res = doc["results"]
    assert res["spec"]["sizes"] == [3, 5, 1, 1, 5]
    assert (res["audit"]["delta"], res["audit"]["threshold"], res["audit"]["gap"]) == (4, "4", "0")
    G = graph6.read_file(str(out))[0]
    assert G.n == 15 and graph6.encode(G).decode() == res["graph6"]
    _golden("construct_clique_15_2_10", doc)


def test_check_tight_c5_blowup(capsys, c5_blowup):
    doc = _report(capsys, ["check", "--in", c5_blowup, "--family", "clique", "--r", "2"])
    res = doc["results"]
    assert res["free"] and not res["partite"]
    assert res["verdict"]["holds"] is False and res["verdict"]["threshold"] == "6"
    assert res["integer_form_holds"] is False
    _golden("check_c5_blowup", doc)


def test_check_reports_witness(capsys, tmp_path):
    p = tmp_path / "k3.g6"
    graph6.write_file(str(p), [complete_graph(3)])
    doc = _report(capsys, ["check", "--in", str(p), "--family", "odd", "--k", "2"])
    assert doc["results"]["witness"]["kind"] == "odd-cycle"


def test_partition_outcomes(capsys, c5_blowup, tmp_path):
    doc = _report(capsys, ["partition", "--in", c5_blowup, "--r", "2"])
    assert doc["results"]["ok"] is False and doc["results"]["violation"]["leftover"]
    p = tmp_path / "k33.g6"
    graph6.write_file(str(p), [blowup(complete_graph(2), [3, 3])])
    doc = _report(capsys, ["partition", "--in", str(p), "--r", "2"])
    assert sorted(map(sorted, doc["results"]["partition"])) == [[0, 1, 2], [3, 4, 5]]
    code, _, err = _call(capsys, ["partition", "--in", c5_blowup, "--r", "2", "--strict"])
    assert code == 1


def test_verify(capsys):
    doc = _report(capsys, ["verify", "--family", "clique", "--r", "2", "--n-max", "7", "--jobs", "1"])
    assert doc["results"]["counterexample_count"] == 0
    assert doc["results"]["levels"][-1]["scanned"] == 2**21
    doc = _report(capsys, ["verify", "--family", "odd", "--k", "2", "--n-max", "5", "--jobs", "2"])
    _golden("verify_odd2_n5", doc)


def test_verify_cap_is_usage_error(capsys):
    code, out, err = _call(capsys, ["verify", "--family", "clique", "--r", "2", "--n-max", "8"])
    assert code == 1 and out == "" and "capped" in err


def test_tightness(capsys):
    doc = _report(capsys, ["tightness", "--family", "clique", "--r", "2", "--n", "7", "--delta-max", "4"])
    assert doc["results"]["max_delta"] == 2
    doc = _report(capsys, ["tightness", "--family", "odd", "--k", "2", "--n", "7", "--delta-max", "4"])
    assert doc["results"]["empty"] is True


def test_sweep_csv(capsys, tmp_path):
    p = tmp_path / "s.csv"
    _report(capsys, ["sweep", "--family", "clique", "--n", "30", "--r", "3", "--delta-range", "20:29:2", "--csv", str(p)])
    with open(p, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert list(rows[0]) == CSV_HEADER
    assert [int(r["delta_max"]) for r in rows] == [20, 22, 24, 26, 28]
    for r in rows:
        assert Fraction(int(r["threshold_num"]), int(r["threshold_den"])) == threshold(30, Mode.clique(3), int(r["delta_max"]))
        assert r["regime"] in ("low-Delta", "high-Delta", "infeasible")


@pytest.mark.parametrize("rng", ["5", "5:", "a:b", "1:5:0"])
def test_sweep_bad_range(capsys, rng):
    code, _, _ = _call(capsys, ["sweep", "--family", "clique", "--n", "30", "--r", "3", "--delta-range", rng])
    assert code == 1


def test_fuzz(capsys):
    doc = _report(capsys, ["fuzz", "--fact31", "--samples", "100", "--n", "14", "--k", "2", "--seed", "1"])
    assert doc["results"]["violation_count"] == 0
    doc = _report(capsys, ["fuzz", "--corollary", "--n-max", "30", "--param-max", "3"])
    assert all(s["violation_count"] == 0 for s in doc["results"]["sweeps"])
    code, _, _ = _call(capsys, ["fuzz"])
    assert code == 1


def test_usage_errors(capsys):
    assert _call(capsys, ["construct", "--family", "clique", "--n", "15", "--delta-max", "6"])[0] == 1
    assert _call(capsys, ["bogus"])[0] == 1
    assert _call(capsys, ["construct", "--family", "clique", "--n", "15", "--r", "2", "--delta-max", "2"])[0] == 1


def test_parse_failures_exit_3(capsys, tmp_path):
    p = tmp_path / "bad.g6"
    p.write_bytes(b"A!\n")
    code, out, err = _call(capsys, ["check", "--in", str(p), "--family", "clique", "--r", "2"])
    assert code == 3 and out == "" and "byte offset 1" in err
    code, _, _ = _call(capsys, ["check", "--in", str(tmp_path / "missing.g6"), "--family", "clique", "--r", "2"])
    assert code == 3


def test_module_entry_point_separates_streams():
    proc = subprocess.run(
        [sys.executable, "-m", "aeskit.cli", "tightness", "--family", "clique", "--r", "2", "--n", "5", "--delta-max", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stderr == ""
    assert json.loads(proc.stdout)["results"]["max_delta"] == 2
