"""CLI contract: subcommands, exit codes, pipes."""

import json
import subprocess
import sys

CMD = [sys.executable, "-m", "boxpierce"]


def run(*args, stdin=None):
    return subprocess.run(CMD + list(args), input=stdin, capture_output=True, text=True)


def test_gen_gadget_parses():
    res = run("gen", "gadget")
    assert res.returncode == 0
    obj = json.loads(res.stdout)
    assert obj["dim"] == 2 and len(obj["boxes"]) == 5
    assert obj["lines"] == {"axis": 1, "c1": 0, "c2": 2}
    assert obj["meta"]["generator"].startswith("boxpierce.gadget")


def test_gen_deterministic_bytes():
    a = run("gen", "random", "--boxes", "6", "--seed", "9")
    b = run("gen", "random", "--boxes", "6", "--seed", "9")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_nu_and_tau_on_gadget():
    inst = run("gen", "gadget").stdout
    nu = run("nu", stdin=inst)
    tau = run("tau", stdin=inst)
    assert json.loads(nu.stdout)["nu"] == 2
    assert json.loads(tau.stdout)["tau"] == 3


def test_gen_extremal_tau_six():
    inst = run("gen", "extremal", "4").stdout
    res = run("tau", stdin=inst)
    assert res.returncode == 0
    assert json.loads(res.stdout)["tau"] == 6


def test_pierce_twoline_gadget():
    inst = run("gen", "gadget").stdout
    res = run("pierce", "--algo", "twoline", stdin=inst)
    assert res.returncode == 0
    obj = json.loads(res.stdout)
    assert obj["size"] == 3 and obj["guarantee"] == 3.0 and obj["nu_used"] == 2
    assert obj["instance"]["dim"] == 2
    assert obj["trace"]


def test_pierce_planar_on_3d_instance_exits_2():
    inst = run("gen", "random", "--boxes", "4", "--dim", "3").stdout
    res = run("pierce", "--algo", "planar", stdin=inst)
    assert res.returncode == 2
    assert "planar" in res.stderr


def test_pierce_twoline_without_certificate_exits_2():
    inst = run("gen", "random", "--boxes", "4").stdout
    res = run("pierce", "--algo", "twoline", stdin=inst)
    assert res.returncode == 2


def test_over_cap_exits_3():
    inst = run("gen", "random", "--boxes", "40", "--range", "0", "100").stdout
    res = run("pierce", "--algo", "planar", stdin=inst)
    assert res.returncode == 3
    res2 = run("nu", "--cap", "10", stdin=run("gen", "extremal", "6").stdout)
    assert res2.returncode == 3


def test_cap_env_override(monkeypatch):
    inst = run("gen", "extremal", "6").stdout
    res = subprocess.run(CMD + ["nu"], input=inst, capture_output=True, text=True,
                         env={"PATH": "", "BOXPIERCE_CAP": "5"})
    assert res.returncode == 3


def test_bounds_csv_contract():
    res = run("bounds", "prop3", "15", "2")
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    assert lines[0] == "rule,n,d,value"
    assert "prop3,5,2,10" in lines
    again = run("bounds", "prop3", "15", "2")
    assert again.stdout == res.stdout


def test_bounds_bad_rule_rejected():
    res = run("bounds", "nosuchrule", "5", "2")
    assert res.returncode == 2


def test_verify_pipe_and_corruption():
    inst = run("gen", "gadget").stdout
    report = run("pierce", "--algo", "twoline", stdin=inst).stdout
    ok = run("verify", stdin=report)
    assert ok.returncode == 0
    obj = json.loads(ok.stdout)
    assert obj["hits_all"] is True and obj["size"] == 3

    broken = json.loads(report)
    broken["points"] = broken["points"][:1]
    bad = run("verify", stdin=json.dumps(broken))
    assert bad.returncode != 0
    assert json.loads(bad.stdout)["violations"]


def test_verify_with_instance_flag(tmp_path):
    inst_text = run("gen", "gadget").stdout
    inst_path = tmp_path / "g.json"
    inst_path.write_text(inst_text)
    points = json.dumps({"points": [[0, 0], [3, 2], [6, 0]]})
    res = run("verify", "--instance", str(inst_path), stdin=points)
    assert res.returncode == 0


def test_verify_oracles_flag():
    inst = run("gen", "gadget").stdout
    report = run("pierce", "--algo", "twoline", stdin=inst).stdout
    res = run("verify", "--oracles", stdin=report)
    obj = json.loads(res.stdout)
    assert obj["nu"] == 2 and obj["tau"] == 3


def test_missing_file_exits_1():
    res = run("nu", "/nonexistent/path.json")
    assert res.returncode == 1


def test_malformed_json_exits_1():
    res = run("nu", stdin="{不")
    assert res.returncode == 1


def test_bench_runs_clean():
    res = run("bench", "--trials", "12", "--boxes", "6", "--seed", "5")
    assert res.returncode == 0
    obj = json.loads(res.stdout)
    assert obj["trials"] == 12 and obj["violations"] == 0


def test_bench_parallel_matches_sequential():
    seq = run("bench", "--trials", "10", "--boxes", "5", "--seed", "2")
    par = run("bench", "--trials", "10", "--boxes", "5", "--seed", "2", "--jobs", "2")
    assert seq.returncode == par.returncode == 0
    assert json.loads(seq.stdout) == json.loads(par.stdout)
