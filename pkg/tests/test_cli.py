import json

import pytest

from linkage.cli import main, run_script
from linkage.report import emit_report


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def test_link_check_json(capsys):
    status, out = run(capsys, "eval", "-e", "ring QQ[x,y]; link check (x*y) (x) (y);")
    assert status == 0
    r = json.loads(out)
    assert {"command", "status", "partner", "regseq", "equalities", "seed", "version"} <= set(r)
    assert r["schema"] == 1 and r["status"] == "linked" and r["partner"]["user"] == "(y)"


def test_sset_and_grade(capsys):
    status, out = run(capsys, "eval", "-e", "ring QQ[x,y,z]; sset (x) (x,y); grade (x,y);")
    assert status == 0
    sset, grade = json.loads(out)
    assert sset["status"] == "not-member" and sset["diagnostic"]["partner"] == "(x)"
    assert grade["value"] == 2


def test_false_verdict_exits_zero(capsys):
    status, _ = run(capsys, "eval", "-e", "ring QQ[x,y]; link check (x) (x,y) (x);")
    assert status == 0


def test_parse_error_exit_one(capsys):
    status, out = run(capsys, "eval", "-e", "ideal a = (x);")
    assert status == 1 and json.loads(out)["error"]["code"] == "E_NO_RING"


def test_precondition_exit_two(capsys):
    status, out = run(capsys, "eval", "-e", "ring QQ[x]; sset (x) (x);")
    assert status == 2 and json.loads(out)["error"]["code"] == "E_STRICT_CONTAINMENT"


def test_usage_error(capsys):
    assert main(["frobnicate"]) == 1


def test_run_script_file(tmp_path, capsys):
    p = tmp_path / "s.lk"
    p.write_text("ring QQ[x] mod (x^2);\nideal m = (x);\nlink find (0) m;\n")
    status, out = run(capsys, "run", str(p), "--format", "text")
    assert status == 0 and "self-linked" in out and "preimage" not in out.split("partner")[0]


def test_quotient_reports_show_both_views(capsys):
    status, out = run(capsys, "eval", "-e", "ring QQ[x,y] mod (x^2); colon (0) (x);")
    r = json.loads(out)
    assert r["views"] == {"user": "(x)", "preimage": "(x)"}


def test_suite_command(tmp_path, capsys):
    out = tmp_path / "r.json"
    status, _ = run(capsys, "suite", "T12", "--seed", "2", "--count", "3", "--out", str(out))
    assert status == 0
    r = json.loads(out.read_text())
    assert r["status"] == "pass" and r["value"]["instances_run"] == 3
    bad, _ = run(capsys, "suite", "T12", "--vars", "9")
    assert bad == 1


def test_emit_is_deterministic():
    [r] = run_script("ring QQ[x,y]; classify (x*y);")
    r["timing"] = None
    assert emit_report(r) == emit_report(dict(r))


def test_replay_from_echo():
    [r] = run_script("ring QQ[x,y,z]; ideal a = (x*y, y*z, x*z); classify a;", seed=4)
    [again] = run_script(r["ring"] + " " + r["command"] + ";", seed=r["seed"])
    for k in ("status", "partner", "regseq", "equalities", "certificate_kind"):
        assert r[k] == again[k]


def test_timeout(capsys):
    status, out = run(capsys, "eval", "--timeout-seconds", "0.001", "-e",
                      "ring QQ[x,y,z,w]; suite C3 seed=1 n=50;")
    assert status == 1 and json.loads(out)["error"]["code"] == "E_TIMEOUT"
