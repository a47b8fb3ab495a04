import json
import subprocess
import sys

import pytest

HOPFQ = [sys.executable, "-m", "hopfq"]


def run(*args, cwd, stdin=None):
    return subprocess.run([*HOPFQ, *args], cwd=cwd, input=stdin, capture_output=True, text=True, timeout=300)


def report_of(proc):
    return json.loads(proc.stdout)


@pytest.fixture(scope="module")
def work(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    for key, name, extra in (
        ("ms32-algebra", "A.json", ()),
        ("taft4", "H4.json", ()),
        ("tau-sign", "tau.json", ()),
        ("r-alpha", "Ralpha.json", ("--alpha", "1")),
        ("s3", "s3.txt", ()),
    ):
        p = run("builtin", key, *extra, "-o", name, cwd=d)
        assert p.returncode == 0, p.stderr
    return d


@pytest.fixture(scope="module")
def bundle(work):
    p = run("qt", "project", "A.json", "H4.json", "tau.json", "Ralpha.json", "--alpha", "1", cwd=work)
    return p


class TestSpecExamples:
    def test_builtin_pipe_verify(self, work):
        exported = run("builtin", "ms32-algebra", cwd=work)
        p = run("verify", "-", "--suite", "hqg", cwd=work, stdin=exported.stdout)
        assert p.returncode == 0
        rep = report_of(p)
        assert rep["status"] == "pass" and rep["inputs"][0]["dim"] == 12

    def test_hopf_algebra_suite_fails_with_witness(self, work):
        p = run("verify", "A.json", "--suite", "hopf-algebra", cwd=work)
        assert p.returncode == 1
        bad = [r for r in report_of(p)["reports"]["hopf-algebra"] if not r["pass"]]
        assert [r["law"] for r in bad] == ["associativity"]
        w = bad[0]["witness"]
        assert w["input"] == ["σ1", "σ2", "σ0u"] and w["output"] == ["σ4u"]

    def test_qt_project(self, work, bundle):
        assert bundle.returncode == 0, bundle.stdout
        rep = report_of(bundle)
        assert rep["artifacts"] == ["projection.json"] and rep["results"]["alpha"] == "1"
        d = json.loads((work / "projection.json").read_text())
        assert d["kind"] == "projection" and d["B"]["dim"] == 48 and len(d["Z"]["basis"]) == 12


class TestCommands:
    def test_split_and_biproduct(self, work, bundle):
        p = run("qt", "split", "projection.json", "-o", "yd.json", cwd=work)
        assert p.returncode == 0
        assert report_of(p)["results"]["product-is-original"] is True
        p = run("qt", "biproduct", "projection.json", cwd=work)
        assert p.returncode == 0
        assert "hqg" in report_of(p)["results"]["verified"]

    def test_qt_check(self, work):
        assert run("qt", "check", "H4.json", "Ralpha.json", cwd=work).returncode == 0
        assert run("qt", "check", "H4.json", "--alpha", "3/5", cwd=work).returncode == 0

    def test_alpha_must_match_file(self, work):
        p = run("qt", "check", "H4.json", "Ralpha.json", "--alpha", "2", cwd=work)
        assert p.returncode == 2

    def test_pairing_commands(self, work):
        p = run("pairing", "cocycle", "A.json", "H4.json", "tau.json", "-o", "omega.json", cwd=work)
        assert p.returncode == 0
        p = run("pairing", "check", "A.json", "H4.json", "tau.json", cwd=work)
        assert p.returncode == 0

    def test_deform_auto_normalize(self, work):
        five = {"base": "H4⊗H4", "entries": [[i, j, "5"] for i in (0, 1) for j in (0, 1)]}
        (work / "five.json").write_text(json.dumps(five))
        assert run("deform", "H4.json", "five.json", cwd=work).returncode == 1
        p = run("deform", "H4.json", "five.json", "--auto-normalize", "-o", "H4s.json", cwd=work)
        assert p.returncode == 0
        res = report_of(p)["results"]
        assert res["normalized"] is True and res["product-changed"] is False

    def test_loop_commands(self, work):
        p = run("loop", "chein", "s3.txt", "-o", "m.txt", cwd=work)
        assert p.returncode == 0
        p = run("loop", "classify", "m.txt", cwd=work)
        assert p.returncode == 0
        p = run("loop", "algebra", "m.txt", "--require", "hopf-algebra", cwd=work)
        assert p.returncode == 1


class TestErrors:
    def test_bad_json(self, work):
        (work / "bad.json").write_text("{not json")
        p = run("verify", "bad.json", cwd=work)
        assert p.returncode == 2 and report_of(p)["status"] == "error"

    def test_missing_file(self, work):
        assert run("verify", "nope.json", cwd=work).returncode == 2

    def test_unknown_suite(self, work):
        assert run("verify", "H4.json", "--suite", "nope", cwd=work).returncode == 2

    def test_shape_error(self, work):
        d = json.loads((work / "H4.json").read_text())
        d["mul"][0] = [0, 0, "1"]
        (work / "short.json").write_text(json.dumps(d))
        assert run("verify", "short.json", cwd=work).returncode == 2


class TestReports:
    def test_deterministic(self, work):
        args = ("verify", "A.json", "--suite", "hopf-algebra", "--report", "r1.json")
        assert run(*args, cwd=work).returncode == 1
        first = (work / "r1.json").read_bytes()
        assert run(*args, cwd=work).returncode == 1
        assert (work / "r1.json").read_bytes() == first

    def test_render(self, work):
        run("verify", "A.json", "--suite", "hopf-algebra", "--report", "r3.json", cwd=work)
        p = run("report", "r3.json", "--format", "text", cwd=work)
        assert p.returncode == 1
        assert "status: fail (exit 1)" in p.stdout and "FAIL associativity" in p.stdout
        p = run("report", "r3.json", "--format", "json", cwd=work)
        assert json.loads(p.stdout)["exit"] == 1
