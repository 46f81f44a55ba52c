import csv
import io
import json

import pytest

from diocount.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_count_examples():
    assert run("count", "--system", "full4", "--l", "2") == (0, "17\n")
    assert run("count", "--system", "floyd3", "--l", "3") == (0, "0\n")
    assert run("count", "--system", "general", "--rhs", "1,1,1,1") == (0, "3\n")


@pytest.mark.parametrize("engine", ["oracle", "closed", "strip", "gf", "auto"])
def test_count_engines_agree(engine):
    # e(6) = 670
    assert run("count", "--system", "full4", "--l", "6", "--engine", engine) == (0, "670\n")


def test_count_json():
    code, out = run("count", "--system", "general", "--rhs", "2,3,1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj == {"system": "general", "rhs": [2, 3, 1], "engine": "gf", "count": "3"}


def test_count_general_uniform_needs_k():
    assert run("count", "--system", "general", "--l", "2")[0] == 2
    assert run("count", "--system", "general", "--l", "2", "--k", "3") == (0, "5\n")


def test_count_errors():
    assert run("count", "--system", "floyd3", "--rhs", "2,2")[0] == 2
    assert run("count", "--system", "full4", "--rhs", "a,b")[0] == 2
    assert run("count", "--system", "nope", "--l", "2")[0] == 2
    assert run("count", "--system", "general", "--rhs", "1,2,3", "--engine", "strip")[0] == 3
    assert run("count", "--system", "general", "--rhs", "9,9,9,9", "--engine", "gf", "--max-cells", "10")[0] == 3


def test_enumerate_examples():
    code, out = run("enumerate", "--system", "full4", "--rhs", "1,1,1,1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert json.loads(lines[0]) == {"k": 4, "alpha": [[0, 0, 0, 1], [0, 1, 0], [0, 0], [0]]}
    code, out = run("enumerate", "--system", "full4", "--rhs", "0,0,0,0")
    assert out.splitlines() == ['{"k":4,"alpha":[[0,0,0,0],[0,0,0],[0,0],[0]]}']
    code, out = run("enumerate", "--system", "full4", "--l", "2", "--limit", "1")
    assert len(out.splitlines()) == 1


def test_enumerate_csv_deterministic():
    a = run("enumerate", "--system", "floyd3", "--l", "4", "--format", "csv")
    b = run("enumerate", "--system", "floyd3", "--l", "4", "--format", "csv")
    assert a == b
    rows = list(csv.reader(io.StringIO(a[1])))
    assert rows[0] == ["a11", "a12", "a13", "a22", "a23", "a33"]
    assert len(rows) == 1 + 15


def test_verify_suites():
    code, out = run("verify", "--suite", "closed-vs-oracle", "--max-l", "12")
    assert code == 0 and out.endswith("13/13 checks passed\n")
    code, out = run("verify", "--suite", "floyd", "--max-l", "40")
    assert code == 0 and "PASS floyd A006003" in out
    code, out = run("verify", "--suite", "proof-blocks")
    assert code == 0 and "FAIL" not in out


def test_verify_failure_exit(monkeypatch):
    import diocount.verify as v

    monkeypatch.setitem(v.SUITES, "floyd", lambda **_: [v.Check("floyd", "x", False, "boom")])
    code, out = run("verify", "--suite", "floyd")
    assert code == 1 and "FAIL floyd x: boom" in out


def test_table_examples():
    assert run("table", "--system", "full4", "--max-l", "2") == (0, "l,count\n0,1\n1,3\n2,17\n")
    code, out = run("table", "--system", "floyd3", "--max-l", "4")
    assert out == "l,count\n0,1\n1,0\n2,5\n3,0\n4,15\n"
    assert run("table", "--system", "full4", "--max-l", "-1")[0] == 2


def test_table_json_and_file(tmp_path):
    path = tmp_path / "t.json"
    code, out = run("table", "--system", "general", "--k", "1", "--max-l", "3", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text()) == [
        {"l": 0, "count": "1"}, {"l": 1, "count": "0"}, {"l": 2, "count": "1"}, {"l": 3, "count": "0"}
    ]


def test_table_unwritable(tmp_path):
    assert run("table", "--system", "full4", "--max-l", "2", "--out", str(tmp_path / "no" / "x.csv"))[0] == 4


def test_bad_env_cells(monkeypatch):
    monkeypatch.setenv("DIO_MAX_CELLS", "lots")
    assert run("count", "--system", "general", "--rhs", "1,2,3")[0] == 2
