import io
import json

import pytest

from zgraded import serialize
from zgraded.cli import main
from test_analysis import DUAL_NUMBERS_DOC


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def build(tmp_path):
    def _build(kind, *params):
        path = tmp_path / f"{kind}{'_'.join(params)}.json".replace("-", "")
        code, _ = run("build", kind, *params, "--out", str(path))
        assert code == 0
        return str(path)

    return _build


def test_build_documents(build):
    doc = json.load(open(build("quaternions")))
    assert [b["degree"] for b in doc["basis"]] == [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]
    doc = json.load(open(build("clifford", "--p", "0", "--q", "3")))
    assert len(doc["basis"]) == 8 and doc["n"] == 4
    assert doc["basis"][1]["degree"] == [1, 0, 0, 1]
    doc = json.load(open(build("twisted", "--n", "2")))
    assert len(doc["basis"]) == 4
    pairs = [(i, j) for i, j, _, _ in doc["structure"]]
    assert len(pairs) == 16 == len(set(pairs))
    assert all(abs(s["num"]) == 1 and s["den"] == 1 for *_, s in doc["structure"])


def test_build_to_stdout_is_deterministic():
    assert run("build", "clifford", "--p", "2", "--q", "1") == run("build", "clifford", "--p", "2", "--q", "1")


@pytest.mark.parametrize("argv", [
    ["build", "clifford", "--p", "1"],
    ["build", "clifford", "--p", "9", "--q", "9"],
    ["build", "matrix", "--m", "3", "--preset", "clifford"],
    ["build", "nonsense"],
    ["verify", "/nonexistent.json"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_verify(build, tmp_path):
    code, out = run("verify", build("quaternions"))
    assert code == 0 and out.count("pass") == 4
    doc = json.load(open(build("quaternions")))
    doc["basis"][3]["degree"] = [0, 0, 0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out = run("verify", str(bad), "--check", "grading")
    assert code == 1 and "FAIL at (i, j, k)" in out
    code, out = run("verify", build("clifford", "--p", "2", "--q", "1"), "--check", "gamma-comm")
    assert code == 0
    assert run("verify", build("quaternions"), "--check", "bogus")[0] == 2


def test_verify_cocycle_and_parse_error(build, tmp_path):
    assert run("verify", build("twisted", "--n", "3"), "--check", "cocycle,assoc")[0] == 0
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run("verify", str(junk))[0] == 2


def test_table(build):
    code, out = run("table", build("quaternions"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["|", "1", "i", "j", "k"]
    assert lines[3].split() == ["i", "|", "+i", "-1", "+k", "-j"]
    assert lines[4].split() == ["j", "|", "+j", "-k", "-1", "+i"]
    assert out == run("table", build("quaternions"))[1]
    code, out = run("table", build("twisted", "--n", "1"))
    assert len(out.splitlines()) == 4
    code, out = run("table", build("even-twisted", "--n", "3"))
    assert "-1" in out and code == 0


def test_table_cap(build):
    assert run("table", build("clifford", "--p", "7", "--q", "0"))[0] == 2


def test_simple(build, tmp_path):
    code, out = run("simple", build("clifford", "--p", "0", "--q", "2"))
    assert code == 0 and out.startswith("simple")
    code, out = run("simple", build("clifford", "--p", "1", "--q", "0"))
    assert code == 1 and out.startswith("not_simple") and "+1+a1" in out
    dual = tmp_path / "dual.json"
    dual.write_text(DUAL_NUMBERS_DOC)
    code, out = run("simple", str(dual))
    assert code == 1 and "nonzero radical" in out and "+d" in out


def test_ideal(build):
    code, out = run("ideal", build("clifford", "--p", "1", "--q", "0"), "--gen", "1+a1")
    assert code == 0 and "dim 1 (proper)" in out and "[1, 1]" in out
    code, out = run("ideal", build("quaternions"), "--gen", "i")
    assert "whole algebra" in out
    assert run("ideal", build("quaternions"), "--gen", "q")[0] == 2


def test_iso(build):
    a = build("clifford-complex", "--n", "2")
    b = build("twisted", "--n", "2", "--field", "gaussian")
    assert run("iso", a, b, "--map", "a1=e1,a2=e2")[0] == 0
    a = build("clifford", "--p", "0", "--q", "2")
    b = build("even-twisted", "--n", "3")
    assert run("iso", a, b, "--map", "a1=e1e3,a2=e2e3")[0] == 0
    a = build("clifford", "--p", "1", "--q", "0")
    b = build("clifford", "--p", "0", "--q", "1")
    assert run("iso", a, b, "--map", "a1=a1")[0] == 1
    assert run("iso", a, b, "--map", "a1=zz")[0] == 2


def test_search(build, tmp_path):
    code, out = run("search", build("matrix", "--m", "2", "--preset", "clifford"), "--max-n", "3")
    assert code == 0 and "found m=3" in out
    code, out = run("search", build("matrix", "--m", "2"), "--max-n", "3")
    assert code == 1 and "obstruction" in out
    code, _ = run("search", build("matrix", "--m", "4", "--preset", "clifford"), "--max-n", "5", "--budget", "5")
    assert code == 3
    mats = tmp_path / "mats.json"
    mats.write_text(json.dumps([[[1, 0], [0, 1]], [[0, 1], [1, 0]], [[1, 0], [0, -1]], [[0, 1], [-1, 0]]]))
    path = tmp_path / "m.json"
    assert run("build", "matrix", "--matrices", str(mats), "--out", str(path))[0] == 0
    assert serialize.load(path).dim == 4
    assert run("search", str(path), "--max-n", "3")[0] == 0
