import io
import json

import pytest

from chernpairs.cli import main
from chernpairs import FieldSpec, PointSet
from chernpairs.pointfile import dump_point_set


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.fixture
def pointfile(tmp_path):
    def make(points, field=None):
        Z = PointSet(field or FieldSpec.rational(), points)
        path = tmp_path / f"z{len(points)}.json"
        dump_point_set(Z, path)
        return str(path)

    return make


def test_classify():
    assert run("classify", "6", "7") == (0, "gap\n")
    assert run("classify", "2", "1") == (0, "effective\n")
    code, out = run("classify", "16", "62", "--explain")
    assert code == 0 and out.startswith("effective") and "t=7" in out and "l=34" in out
    code, out = run("classify", "16", "47", "--explain")
    assert "gap" in out and "luroth_gap=LS(3)[a=1]:[1,1]" in out
    code, out = run("classify", "6", "29", "--explain")
    assert "dual_y=7" in out


def test_classify_usage_errors():
    assert run("classify", "6", "x")[0] == 2
    assert run("classify", "6")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2


def test_classify_json_round_trip():
    code, out = run("classify", "16", "62", "--format", "json")
    doc = json.loads(out)
    assert doc["effective"] and doc["t"] == 7 and doc["l"] == 34
    assert json.dumps(doc, sort_keys=True) == out.strip()


@pytest.mark.parametrize("c", [1, 6, 11])
def test_table_row_count(c):
    code, out = run("table", str(c))
    lines = out.splitlines()
    assert code == 0 and lines[0].split("\t") == ["y", "status", "case", "t", "l"]
    assert len(lines) - 1 == c * c + 1
    assert [int(line.split("\t")[0]) for line in lines[1:]] == list(range(c * c + 1))


def test_table_json():
    code, out = run("table", "6", "--format", "json")
    rows = json.loads(out)
    assert [r["y"] for r in rows] == list(range(37))
    assert [r["y"] for r in rows if not r["effective"]] == [1, 2, 3, 4, 7, 29, 32, 33, 34, 35]


def test_gaps():
    assert run("gaps", "6") == (0, "7 29\n")
    assert run("gaps", "4") == (0, "")
    code, out = run("gaps", "7", "--format", "tsv")
    assert out.splitlines() == ["window_gap\tdual_gap", "8\t41", "9\t40"]
    assert json.loads(run("gaps", "6", "--format", "json")[1]) == [{"window_gap": 7, "dual_gap": 29}]
    assert run("gaps", "-1")[0] == 2


def test_luroth():
    assert run("luroth", "6") == (0, "[1,4] [7,7]\n")
    assert run("luroth", "2") == (0, "")
    assert json.loads(run("luroth", "11", "--format", "json")[1]) == [[1, 9], [12, 17], [23, 23]]
    assert run("luroth", "0")[0] == 2


def test_bidegrees():
    code, out = run("bidegrees", "2")
    assert code == 0 and "1 3 yes" in out.splitlines()
    assert run("bidegrees", "0")[0] == 2


def test_points_commands(pointfile):
    line4 = pointfile([(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1)])
    assert run("points", "character", line4) == (0, "(4,2)\n")
    line3 = pointfile([(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert run("points", "cb", line3, "--degree", "1") == (0, "true\n")
    one = pointfile([(1, 2, 3)])
    code, out = run("points", "cb", one, "-n", "1")
    assert code == 0 and out.splitlines()[0] == "false" and out.splitlines()[1].startswith("witness point=(1:2:3)")
    code, out = run("points", "hilbert", line3)
    assert out.splitlines()[1] == "1 2 1 1"


def test_points_json(pointfile):
    f = pointfile([(1, 0, 0), (0, 1, 0), (0, 0, 1)], FieldSpec.prime(101))
    # no line contains three non-collinear points
    assert run("points", "gg", f, "--degree", "1")[0] == 2
    code, out = run("points", "gg", f, "--degree", "2", "--format", "json")
    assert json.loads(out)["verdict"] == "Generated"
    code, out = run("points", "cb", f, "--degree", "1", "--format", "json")
    doc = json.loads(out)
    assert doc["holds"] is False and doc["witness"]["point"]


def test_points_errors(pointfile, tmp_path):
    bad = tmp_path / "dup.json"
    bad.write_text(json.dumps({"field": "rational", "points": [["1", "0", "0"], ["2", "0", "0"]]}))
    assert run("points", "character", str(bad))[0] == 2
    assert run("points", "character", str(tmp_path / "missing.json"))[0] == 2
    f = pointfile([(1, 0, 0)])
    assert run("points", "cb", f)[0] == 2
    assert run("points", "gg", f, "--degree", "0")[0] == 2


def test_duplicate_index_reported(tmp_path, capsys):
    bad = tmp_path / "dup.json"
    bad.write_text(json.dumps({"field": "rational", "points": [["1", "0", "0"], ["0", "1", "0"], ["2", "0", "0"]]}))
    assert run("points", "hilbert", str(bad))[0] == 2
    assert "point 2" in capsys.readouterr().err


def test_verify_usage_errors():
    assert run("verify", "--prime", "4")[0] == 2
    assert run("verify", "--max-c", "501")[0] == 2
    assert run("verify", "--trials", "0")[0] == 2


def test_env_defaults(monkeypatch):
    monkeypatch.setenv("CHERN_PRIME", "4")
    assert run("verify", "--max-c", "5")[0] == 2
    monkeypatch.setenv("CHERN_PRIME", "x")
    assert run("verify")[0] == 2


def test_verify_small_json():
    code, out = run("verify", "--seed", "3", "--max-c", "12", "--trials", "5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert json.dumps(doc, sort_keys=True) == out.strip()
    assert {s["name"] for s in doc["suites"]} >= {"golden_tables", "duality", "ci_cayley_bacharach", "determinism"}


def test_verify_failure_exits_1(monkeypatch):
    from chernpairs import verify

    def boom(cfg):
        raise RuntimeError("suite crashed")

    monkeypatch.setattr(verify, "SUITES", (verify.SUITES[0], boom))
    code, out = run("verify", "--max-c", "8", "--trials", "2")
    assert code == 1
    assert "FAIL boom" in out and "RuntimeError: suite crashed" in out and out.endswith("1 suite(s) failed\n")
