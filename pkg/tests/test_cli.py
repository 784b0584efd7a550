import json
import shutil
import subprocess
import sys

import pytest

from glhall.cli import (
    coweight_from_json,
    coweight_to_json,
    main,
    poly_from_json,
    poly_to_json,
)
from glhall.folding import L_table
from glhall.laurent import Q, HalfLaurent
from glhall.roots import RootDatum, vec
from glhall.tableaux import parse_tableau


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "A", "2", "--eps", "2,1,0", "--mu", "1,1,1")
    assert code == 0 and out.strip() == "mu=(1,1,1): 2*q^2 - q - 1"
    code, out, _ = run(capsys, "compute", "A", "1", "--eps", "0,0")
    assert code == 0 and out.strip() == "mu=(0,0): 1"


def test_compute_json_schema(capsys):
    code, out, _ = run(capsys, "compute", "A", "2", "--eps", "2,1,0", "--mu", "1,1,1", "--format", "json")
    data = json.loads(out)
    assert set(data) == {"family", "rank", "lambda", "mu", "L"}
    assert data["L"] == [[0, -1], [1, -1], [2, 2]]
    assert poly_from_json(data["L"]) == 2 * Q**2 - Q - 1


def test_compute_c2_contains_fixture_summand(capsys):
    code, out, _ = run(capsys, "compute", "C", "2", "--omega", "1,1", "--mu", "0,1", "--format", "json")
    assert code == 2  # (0,1) is not dominant for C2
    code, out, _ = run(capsys, "compute", "C", "2", "--omega", "1,1", "--mu", "1,0", "--format", "json")
    total = poly_from_json(json.loads(out)["L"])
    code, out, _ = run(capsys, "tableaux", "C", "2", "--omega", "1,1", "--format", "json")
    summands = [poly_from_json(t["c"]) for t in json.loads(out)]
    assert Q * (Q - 1) ** 2 in summands
    assert sum((poly_from_json(t["c"]) for t in json.loads(out) if t["content"] == [1, 0]), HalfLaurent()) == total


def test_compute_text_and_json_agree(capsys):
    for fam, rank, om in [("B", 2, "1,1"), ("C", 3, "0,1,0"), ("A", 3, "1,0,1")]:
        _, text, _ = run(capsys, "compute", fam, str(rank), "--omega", om)
        _, js, _ = run(capsys, "compute", fam, str(rank), "--omega", om, "--format", "json")
        records = json.loads(js)
        lines = text.strip().splitlines()
        assert len(lines) == len(records)
        for line, rec in zip(lines, records):
            assert line.split(": ", 1)[1] == str(poly_from_json(rec["L"]))


def test_tableaux_listing(capsys):
    code, out, _ = run(capsys, "tableaux", "A", "2", "--eps", "0,0,0")
    assert code == 0 and "(empty)" in out and "c(T) = 1" in out
    code, out, _ = run(capsys, "tableaux", "A", "2", "--eps", "2,1,0", "--mu", "1,1,1", "--format", "json")
    data = json.loads(out)
    assert [d["tableau"] for d in data] == ["1,2\n3", "1,3\n2"]
    assert poly_from_json(data[1]["c"]) == Q**2 - 1
    code, out, _ = run(capsys, "tableaux", "A", "2", "--eps", "1,0,0", "--mu", "1,1,1", "--format", "json")
    assert json.loads(out) == []


def test_tree(capsys):
    code, out, _ = run(capsys, "tree", "A", "2", "--tableau", "1,3;2")
    assert code == 0 and out.count("->") == 4 and out.count("peripheries=2") == 2
    code, out, _ = run(capsys, "tree", "B", "2", "--tableau", "1,1,1'/2'", "--pair", "1")
    assert code == 0 and '"id1_0+"' in out and out.count("->") == 1
    code, out, _ = run(capsys, "tree", "A", "2", "--tableau", "2,3;3")
    assert code == 0 and "->" not in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "A", "2", "--eps", "0,0,0")
    assert code == 0 and out.strip().endswith("PASS")
    code, out, _ = run(capsys, "verify", "A", "2", "--sweep", "3", "--format", "json")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "verify", "B", "2", "--omega", "1,1", "--against", "definition")
    assert code == 0
    code, out, _ = run(capsys, "verify", "A", "2", "--omega", "1,1", "--inject-fault")
    assert code == 3 and "FAIL" in out


def test_usage_errors(capsys):
    assert run(capsys, "compute", "A", "2", "--eps", "1,2,0")[0] == 2
    assert run(capsys, "compute", "A", "2")[0] == 2
    assert run(capsys, "compute", "A", "2", "--eps", "1,0,0", "--omega", "1,0")[0] == 2
    assert run(capsys, "compute", "B", "2", "--eps", "1/3,0")[0] == 2
    assert run(capsys, "tree", "A", "2", "--tableau", "2;1")[0] == 2
    assert run(capsys, "tree", "A", "2", "--tableau", "1,3;2", "--pair", "4")[0] == 2
    assert run(capsys, "verify", "B", "2", "--omega", "1,0", "--against", "macdonald")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "D", "2"])
    assert exc.value.code == 2


def test_invariant_violation_exit_code(capsys, monkeypatch):
    from glhall import cli
    from glhall.folding import InvariantViolation

    def boom(*args, **kwargs):
        raise InvariantViolation("odd exponent")

    monkeypatch.setattr(cli, "L_table", boom)
    code, _, err = run(capsys, "compute", "A", "1", "--eps", "1,0")
    assert code == 3 and "odd exponent" in err


def test_json_round_trips():
    for datum, lam in [(RootDatum("B", 2), ("3/2", "1/2")), (RootDatum("C", 2), (2, 1)), (RootDatum("A", 2), (2, 1, 0))]:
        lam = vec(lam)
        assert coweight_from_json(json.loads(json.dumps(coweight_to_json(lam)))) == lam
        for poly in L_table(datum, lam).values():
            assert poly_from_json(json.loads(json.dumps(poly_to_json(poly)))) == poly
    T = parse_tableau("1,2,2'\n2',1'", RootDatum("C", 2))
    assert parse_tableau(T.to_text(), RootDatum("C", 2)) == T


def test_console_script():
    exe = shutil.which("glhall")
    cmd = [exe] if exe else [sys.executable, "-m", "glhall.cli"]
    out = subprocess.run(cmd + ["compute", "A", "1", "--eps", "2,0", "--mu", "1,1"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "mu=(1,1): q - 1"
