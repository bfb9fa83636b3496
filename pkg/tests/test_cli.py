import json

import jsonschema
import pytest

from reedbound.cli import main, report_schema


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_five_cycle(capsys):
    code, out, _ = run(capsys, "analyze", "cycle(5)")
    assert code == 0
    assert "chi=3 omega=2 alpha=2 Delta=2" in out and "nu=2" in out
    assert "excess: +1/2" in out
    assert "factorization: 1 factor (5)" in out


def test_analyze_complete_and_graph6(capsys):
    code, out, _ = run(capsys, "analyze", "complete(4)")
    assert code == 0 and "excess: 0" in out and "complement: nu=0  1-factor: no" in out
    code, out, _ = run(capsys, "analyze", "Bw", "--json")
    data = json.loads(out)
    assert data["record"] == {"n": 3, "chi": 3, "omega": 3, "alpha": 1, "max_degree": 2,
                              "min_degree": 2, "nu": 1}


def test_analyze_bad_input(capsys):
    code, _, err = run(capsys, "analyze", "B")
    assert code == 1 and "error" in err


def test_usage_error_is_operational(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--corpus", "bogus"])
    assert exc.value.code == 1
    code, _, err = run(capsys, "verify", "--corpus", "named", "--name", "petersen", "--statements", "nope")
    assert code == 1 and "unknown statement" in err


def test_verify_writes_valid_report(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, text, _ = run(capsys, "verify", "--corpus", "exhaustive", "--n", "5", "--pairs", "40",
                        "--tuples", "10", "--jobs", "1", "--out", str(out))
    assert code == 0 and "reed_conjecture" in text
    rep = json.loads(out.read_text())
    jsonschema.validate(rep, report_schema())
    assert rep["population"] == 1 + 2 + 8 + 64 + 1024
    for key, s in rep["statements"].items():
        assert s["holds"] + s["vacuous"] + s["violated"] == s["population"]
        if s["arity"] == "graph":
            assert s["population"] == rep["population"]


def test_verify_named_petersen(capsys, tmp_path):
    out = tmp_path / "p.json"
    code, _, _ = run(capsys, "verify", "--corpus", "named", "--name", "petersen", "--out", str(out))
    rep = json.loads(out.read_text())
    assert code == 0 and rep["violations"] == []
    assert rep["statements"]["reed_conjecture"]["holds"] == 1


def test_verify_random_is_deterministic(capsys, tmp_path):
    args = ["verify", "--corpus", "random", "--n", "8", "--p", "1/2", "--seed", "42", "--count", "2000"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, *args, "--jobs", "1", "--out", str(a))[0] == 0
    assert run(capsys, *args, "--jobs", "2", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_csv(capsys, tmp_path):
    out = tmp_path / "t.csv"
    code, _, _ = run(capsys, "verify", "--corpus", "exhaustive", "--n", "3", "--format", "csv", "--out", str(out))
    lines = out.read_text().splitlines()
    assert code == 0 and lines[0].startswith("label,graph6,n,chi")
    assert len(lines) == 1 + 1 + 2 + 8
    assert lines[-1].endswith(",Bw,3,3,3,1,2,2,1,0/1")


def test_verify_file_with_bad_line(capsys, tmp_path):
    p = tmp_path / "in.g6"
    p.write_text("Bw\nB\nDhc\n")
    code, _, err = run(capsys, "verify", "--corpus", "file", "--path", str(p),
                       "--statements", "reed_conjecture")
    assert code == 0 and "line 2" in err


def test_verify_exit_code_on_violation(capsys, monkeypatch, tmp_path):
    from reedbound import bounds

    stmt = bounds.CATALOG["order_bound"]
    broken = bounds.Statement(stmt.key, stmt.arity, stmt.summary, stmt.hypothesis,
                              lambda f: (f.chi < 3, None, {"chi": f.chi}))
    monkeypatch.setitem(bounds.CATALOG, "order_bound", broken)
    out = tmp_path / "v.json"
    code, _, _ = run(capsys, "verify", "--corpus", "exhaustive", "--n", "4", "--statements", "order_bound",
                     "--out", str(out))
    rep = json.loads(out.read_text())
    jsonschema.validate(rep, report_schema())
    assert code == 2
    assert rep["statements"]["order_bound"]["violated"] == sum(v["count"] for v in rep["violations"]) > 0
    assert all(v["inputs"] and v["facts"] for v in rep["violations"])
    code, _, _ = run(capsys, "verify", "--corpus", "exhaustive", "--n", "6", "--statements", "order_bound",
                     "--fail-fast", "--jobs", "1", "--out", str(out))
    assert code == 2 and json.loads(out.read_text())["complete"] is False


def test_tuple_statement_needs_sampling(capsys):
    code, _, err = run(capsys, "verify", "--statements", "sparse_join_deficit")
    assert code == 1 and "--tuples" in err


def test_search_conjecture(capsys, tmp_path):
    out = tmp_path / "s.json"
    code, text, _ = run(capsys, "search", "conjecture29", "--m", "1", "--k", "2", "--max-factor-order", "5",
                        "--out", str(out))
    rep = json.loads(out.read_text())
    jsonschema.validate(rep, report_schema())
    assert code == 0 and rep["violations"] == [] and rep["tuples_checked"] > 0


def test_search_tightness(capsys, tmp_path):
    out = tmp_path / "t.json"
    code, _, _ = run(capsys, "search", "tightness", "--statements", "averaged_bound", "--corpus", "exhaustive",
                     "--n", "6", "--out", str(out))
    rep = json.loads(out.read_text())
    jsonschema.validate(rep, report_schema())
    rec = rep["statements"]["averaged_bound"]
    assert code == 0 and rec["min_slack"] == "0/1" and rec["witness"]["inputs"]


def test_search_five_cycle(capsys, tmp_path):
    out = tmp_path / "f.json"
    code, _, _ = run(capsys, "search", "five-cycle", "--count", "20", "--out", str(out))
    rep = json.loads(out.read_text())
    jsonschema.validate(rep, report_schema())
    assert code == (3 if rep["violated"] else 0)


def test_statements_listing(capsys):
    code, out, _ = run(capsys, "statements")
    assert code == 0 and "reed_conjecture [graph]" in out
