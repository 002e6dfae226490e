import json
import subprocess
import sys
from pathlib import Path

import pytest

from crndecomp import catalog
from crndecomp.cli import main
from crndecomp.parser import parse_kinetic_system

ROOT = Path(__file__).resolve().parent.parent
NETWORKS = ROOT / "networks"
GOLDEN = Path(__file__).resolve().parent / "golden"


def run(*args, stdin=None, env=None):
    return subprocess.run([sys.executable, "-m", "crndecomp.cli", *args], input=stdin,
                          capture_output=True, text=True, env=env)


def call(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_golden_subprocess():
    res = run("analyze", str(NETWORKS / "cycles_m1_m5.crn"))
    assert res.returncode == 0
    assert res.stdout == (GOLDEN / "cycles_m1_m5.analyze.txt").read_text()


def test_transform_golden(capsys):
    code, out, _ = call(capsys, "transform", str(NETWORKS / "branching_abc.crn"),
                        "--variant", "cf-rm-plus")
    assert code == 0
    assert out == (GOLDEN / "branching_abc.cf-rm-plus.txt").read_text()
    assert "R3: 2A -> A" in out and "R4: 2B -> B" in out


def test_analyze_conclusion_lines(capsys):
    _, out, _ = call(capsys, "analyze", str(NETWORKS / "branching_abc.crn"))
    assert "CONCLUSION 2: The F-decomposition is NOT INCIDENCE-INDEPENDENT." in out
    for i in (1, 2, 3):
        lines = [ln for ln in out.splitlines() if ln.startswith(f"CONCLUSION {i}:")]
        assert len(lines) == 1


def test_stdin(capsys):
    res = run("analyze", "-", stdin=catalog.CYCLES_M1_M5)
    assert res.returncode == 0 and "SUBNETWORK 2:" in res.stdout


def test_json_schema_and_agreement(capsys):
    path = str(NETWORKS / "branching_abc.crn")
    _, out, _ = call(capsys, "analyze", path, "--format", "json")
    rep = json.loads(out)
    assert rep["schema_version"] == 1 and rep["command"] == "analyze"
    d = rep["decomposition"]
    assert [p["reactions"] for p in d["parts"]] == [["R1", "R3"], ["R2", "R5"], ["R4"]]
    assert (d["incidence_sum"], d["whole"]["n_minus_l"]) == (5, 3)
    _, text, _ = call(capsys, "analyze", path)
    assert f"The SUM of the values of (n-l) of the SUBNETWORKS is: {d['incidence_sum']}" in text
    for p in d["parts"]:
        assert f"SUBNETWORK {p['index']}:" in text
        for line in p["reaction_text"]:
            assert line in text


def test_decompose_kinds(capsys, tmp_path):
    f = tmp_path / "phos.crn"
    f.write_text(catalog.phosphorylation(2))
    _, out, _ = call(capsys, "decompose", str(f), "--kind", "f", "--format", "json")
    assert len(json.loads(out)["decomposition"]["parts"]) == 2
    cyc = str(NETWORKS / "cycles_m1_m5.crn")
    _, out, _ = call(capsys, "decompose", cyc, "--kind", "o", "--format", "json")
    assert len(json.loads(out)["decomposition"]["parts"]) == 1
    _, p, _ = call(capsys, "decompose", cyc, "--kind", "p", "--format", "json")
    _, pt, _ = call(capsys, "decompose", cyc, "--kind", "ptilde", "--format", "json")
    parts = lambda s: [q["reactions"] for q in json.loads(s)["decomposition"]["parts"]]
    assert parts(p) == parts(pt)


def test_verdict_commands(capsys, tmp_path):
    _, out, _ = call(capsys, "verdict", str(NETWORKS / "cycles_m1_m5.crn"),
                     "--kinetics", "mass-action")
    assert "VERDICT: no capacity for multistationarity" in out
    _, out, _ = call(capsys, "verdict", str(NETWORKS / "chain_of_3_cycles.crn"),
                     "--kinetics", "mass-action")
    assert "no capacity for multistationarity" in out
    _, out, _ = call(capsys, "verdict", str(NETWORKS / "branching_abc.crn"),
                     "--kinetics", "arbitrary", "--format", "json")
    v = json.loads(out)["verdict"]
    assert v["conclusion"] == "Inconclusive" and v["phrase"] == "inconclusive"


def test_transform_rdk_is_identity(capsys, tmp_path):
    src = tmp_path / "ma.crn"
    src.write_text(catalog.CYCLES_M1_M5 + "kinetics: mass-action\n")
    out_file = tmp_path / "out.crn"
    code, out, _ = call(capsys, "transform", str(src), "--variant", "cf-ri-plus",
                        "--out", str(out_file), "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["steps"] == [] and rep["dynamically_equivalent"]
    assert parse_kinetic_system(out_file.read_text()) == parse_kinetic_system(src.read_text())


def test_transform_json_reports_flip(capsys):
    _, out, _ = call(capsys, "transform", str(NETWORKS / "branching_abc.crn"),
                     "--variant", "cf-rm", "--format", "json")
    inv = json.loads(out)["invariants"]
    assert inv["f_incidence_independent"] == [False, True]
    assert inv["incidence_independence_changed"]


def test_exit_codes(capsys, tmp_path):
    empty = tmp_path / "empty.crn"
    empty.write_text("")
    code, _, err = call(capsys, "analyze", str(empty))
    assert code == 2 and "parse error" in err
    code, _, _ = call(capsys, "analyze", str(tmp_path / "missing.crn"))
    assert code == 2
    bad = tmp_path / "bad.crn"
    bad.write_text("R1: A -> B\nR2: A => C\n")
    code, _, err = call(capsys, "verdict", str(bad), "--kinetics", "arbitrary")
    assert code == 2 and "line 2" in err
    code, _, err = call(capsys, "transform", str(NETWORKS / "cycles_m1_m5.crn"),
                        "--variant", "cf-rm")
    assert code == 3 and "kinetics" in err
    zero = tmp_path / "zero.crn"
    zero.write_text("R1: 0 -> A\nR2: 0 -> B\nkinetics:\n0 0\n1 0\n")
    code, _, _ = call(capsys, "transform", str(zero), "--variant", "cf-rm")
    assert code == 3


def test_color_env(tmp_path):
    import os
    env = dict(os.environ, CRN_COLOR="1")
    res = run("analyze", str(NETWORKS / "cycles_m1_m5.crn"), env=env)
    assert "\033[32m" in res.stdout
    env["CRN_COLOR"] = "0"
    assert "\033[" not in run("analyze", str(NETWORKS / "cycles_m1_m5.crn"), env=env).stdout


def test_deterministic(capsys):
    outs = [call(capsys, "analyze", str(NETWORKS / "phosphorylation_k2.crn"), "--format", "json")[1]
            for _ in range(2)]
    assert outs[0] == outs[1]
