import json
import subprocess
import sys

import pytest

from ffrt import cli, report, specio


def run(*argv):
    return subprocess.run([sys.executable, "-m", "ffrt.cli", *argv], capture_output=True, text=True)


def test_decompose_cusp(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert cli.main(["decompose", "--ring", "corpus:cusp", "--e", "1", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    summands = rep["per_e"][0]["summands"]
    assert len(summands) == 2 and all(s["kind"] == "Free" for s in summands)
    assert [s["shift"] for s in summands] == ["0", "-3/2"]
    assert "ring cusp" in capsys.readouterr().out


def test_verdict_quartic_json(capsys):
    assert cli.main(["verdict", "--ring", "corpus:quartic_u", "--emax", "8", "--format", "json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["verdict"]["status"] == "NOT_FFRT_CERTIFIED"
    assert rep["certificates"]["recurrence"]["ok"]
    assert len(rep["certificates"]["pairwise"]) == 21


def test_verdict_gf16_period(capsys):
    assert cli.main(["verdict", "--ring", "corpus:gf16", "--emax", "10", "--format", "json"]) == 0
    v = json.loads(capsys.readouterr().out)["verdict"]
    assert v["status"] == "FFRT_CERTIFIED" and v["period"] == 4


def test_tower_command(capsys):
    assert cli.main(["tower", "--tower", "corpus:brenner_p7", "--e", "1", "--format", "json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["tower"]["hilbert_check"] == {"order": 40, "pass": True}
    assert rep["per_e"][0]["count"] == 343


def test_certificate_table(capsys):
    assert cli.main(["certificate", "--ring", "corpus:quartic_u"]) == 0
    assert "certificate: ok" in capsys.readouterr().out


def test_error_exit_codes(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    r = run("decompose", "--ring", str(bad), "--e", "1")
    assert r.returncode == 1 and "ParseError" in r.stderr
    r = run("decompose", "--ring", "corpus:t57_f2", "--e", "1")
    assert r.returncode == 1 and "ConductorNotCleared" in r.stderr
    r = run("certificate", "--ring", "corpus:gf16")
    assert r.returncode == 1 and "PatternMismatch" in r.stderr
    missing = tmp_path / "missing.json"
    assert cli.main(["decompose", "--ring", str(missing), "--e", "1"]) == 1


def test_missing_key_is_parse_error(tmp_path):
    spec = tmp_path / "r.json"
    spec.write_text(json.dumps({"k": {"kind": "finite", "p": 2}}))
    assert cli.main(["decompose", "--ring", str(spec), "--e", "1"]) == 1


def test_failed_check_exits_2(tmp_path, capsys):
    out = tmp_path / "r.json"
    cli.main(["decompose", "--ring", "corpus:cusp", "--e", "1", "--out", str(out)])
    rep = json.loads(out.read_text())
    rep["per_e"][0]["summands"][1]["shift"] = "-1/2"
    out.write_text(specio.dumps(rep))
    assert cli.main(["verify", str(out)]) == 2
    assert "FAIL" in capsys.readouterr().out


def test_reports_are_deterministic(tmp_path):
    paths = [tmp_path / f"{n}.json" for n in range(2)]
    for p in paths:
        r = run("verdict", "--ring", "corpus:sextic_u", "--emax", "5", "--out", str(p))
        assert r.returncode == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


@pytest.mark.parametrize("argv", [
    ["decompose", "--ring", "corpus:gf27", "--e", "2"],
    ["verdict", "--ring", "corpus:quartic_u", "--emax", "6"],
    ["certificate", "--ring", "corpus:quartic_u", "--emax", "10"],
    ["tower", "--tower", "corpus:brenner_p2"],
    ["tower", "--tower", "corpus:gf4_tower", "--emax", "3"],
])
def test_round_trip_verify(tmp_path, argv):
    out = tmp_path / "r.json"
    assert cli.main([*argv, "--out", str(out)]) == 0
    checks = report.verify_report(json.loads(out.read_text()))
    assert checks and all(ok for _, ok in checks)
    assert cli.main(["verify", str(out)]) == 0


def test_spec_round_trip():
    for name in specio.corpus_names():
        obj = specio.load_json(specio.corpus_path(name))
        if "generators" in obj:
            A = specio.parse_ring(obj)
            assert specio.ring_to_spec(specio.parse_ring(specio.ring_to_spec(A))) == specio.ring_to_spec(A)
        else:
            T = specio.parse_tower(obj)
            assert specio.tower_to_spec(specio.parse_tower(specio.tower_to_spec(T))) == specio.tower_to_spec(T)


def test_selftest_quick():
    r = run("selftest", "--quick")
    assert r.returncode == 0, r.stdout + r.stderr
    assert r.stdout.count("PASS") == 8
