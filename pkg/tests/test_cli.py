import io
import json

import pytest

from g2contractions.cli import main, parse_support, UsageError
from g2contractions.nice import REPRESENTATIVES


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, out=out, inp=io.StringIO(stdin))
    return code, out.getvalue()


def test_g2_table_deterministic():
    c1, a = run(["g2", "table"])
    c2, b = run(["g2", "table"])
    assert c1 == c2 == 0 and a == b
    rows = json.loads(a)
    assert len(rows) == 276
    assert {"i", "j", "k", "value"} <= set(rows[0])


def test_g2_table_csv():
    code, text = run(["g2", "table", "--format", "csv"])
    assert code == 0 and text.splitlines()[0] == "i,j,k,bi,bj,bk,value"


def test_build_then_invariants():
    code, built = run(["contract", "build", "--support", "T21", "--ones"])
    assert code == 0
    code, rep = run(["invariants"], built)
    assert code == 0
    rec = json.loads(rep)[0]
    assert rec["nilindex"] == 3 and rec["label"] == "T21"


def test_label_t14():
    _, built = run(["contract", "build", "--support", "12,13,15,16", "--values", "2,3,4,5"])
    code, out = run(["contract", "label", "--format", "text"], built)
    assert code == 0 and "T14(8/15)" in out


def test_label_reports_non_members(capsys):
    code, built = run(["contract", "build", "--support", "12,35", "--ones"])
    assert code == 0
    assert "not in A" in capsys.readouterr().err
    code, out = run(["contract", "label"], built)
    assert json.loads(out)[0]["label"] is None
    code, _ = run(["invariants"], built)
    assert code == 2


def test_orbit_table(tmp_path):
    code, out = run(["nice", "classify", "--orbit-table", "--format", "text"])
    assert code == 0
    assert out.splitlines()[0].split("|")[0].strip() == "i"
    path = tmp_path / "orbits.json"
    code, _ = run(["nice", "classify", "--orbit-table", "--out", str(path)])
    rows = json.loads(path.read_text())
    assert sum(r["nice_sets"] for r in rows) == 779


def test_nice_enumerate_jobs_identical():
    _, a = run(["nice", "enumerate", "--format", "csv"])
    _, b = run(["nice", "enumerate", "--format", "csv", "--jobs", "4"])
    assert a == b and len(a.splitlines()) == 780


def test_usage_errors(capsys):
    assert run(["bogus"])[0] == 2
    assert run(["contract", "build"])[0] == 2
    assert run(["contract", "build", "--support", "T99", "--ones"])[0] == 2
    assert run(["contract", "build", "--support", "T2", "--values", "1,2"])[0] == 2
    assert run(["contract", "label", "--in", "/nonexistent/file.json"])[0] == 2
    code, _ = run(["invariants"], "[\n}")
    assert code == 2
    assert "line 2, column 1" in capsys.readouterr().err


def test_parse_support():
    assert parse_support("T6") == REPRESENTATIVES[6]
    assert parse_support("12,13") == REPRESENTATIVES[3]
    with pytest.raises(UsageError):
        parse_support("1x")
