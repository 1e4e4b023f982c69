import csv
import io
import json

import pytest

from eccentree.cli import main
from eccentree.enumeration import canonical_code
from eccentree.families import spider, t_n_beta
from eccentree.formats import from_graph6, read_edgelist, write_edgelist


@pytest.fixture
def t73_file(tmp_path):
    p = tmp_path / "t73.txt"
    p.write_text(write_edgelist(t_n_beta(7, 3)))
    return p


def test_invariants(t73_file, capsys):
    assert main(["invariants", str(t73_file)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[:3] == ["n 7", "diameter 4", "radius 2"]
    assert "REE_EDGE 9/2 4.5" in out and "REE_VERTEX 9/2 4.5" in out


def test_invariants_graph6_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("Ds_\n"))
    assert main(["invariants", "-"]) == 0
    assert "REE_VERTEX 6 6" in capsys.readouterr().out.splitlines()


def test_bad_input_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("3\n0 1\n1 0\n")
    assert main(["invariants", str(p)]) == 2
    assert capsys.readouterr().err.startswith("error:")
    assert main(["invariants", str(tmp_path / "missing.txt")]) == 2


def test_family(capsys):
    assert main(["family", "--name", "tnb", "--params", "7,3"]) == 0
    t = read_edgelist(capsys.readouterr().out)
    assert canonical_code(t) == canonical_code(t_n_beta(7, 3))
    assert main(["family", "--name", "dspider", "--params", "3,1|2,2"]) == 2


def test_transform_reports_precondition(tmp_path, t73_file, capsys):
    p = tmp_path / "spider.txt"
    p.write_text(write_edgelist(spider([3, 3, 2])))
    assert main(["transform", "--kind", "regraft", "--in", str(p)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].startswith("# kind=regraft precondition_held=yes")
    assert main(["transform", "--kind", "shift", "--in", str(t73_file)]) == 2


def test_enumerate(capsys):
    assert main(["enumerate", "10", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "106"
    assert main(["enumerate", "8", "--class", "diameter=4", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "8"
    assert main(["enumerate", "6"]) == 0
    lines = capsys.readouterr().out.split()
    assert len(lines) == 6 and all(from_graph6(x).n == 6 for x in lines)
    assert main(["--max-n", "5", "enumerate", "6"]) == 2


def test_extremal(capsys):
    assert main(["extremal", "7", "--class", "matching=3"]) == 0
    out = capsys.readouterr().out
    assert "value 9/2 4.5" in out and "witnesses 1" in out
    assert main(["extremal", "7", "--class", "all"]) == 0
    assert "value 9 9" in capsys.readouterr().out


def test_verify_formats_and_exit_codes(capsys):
    assert main(["verify", "t42", "--n", "8", "--params", "3", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)
    assert row["verdict"] == "PASS" and row["found_value"] == "16/3"
    assert main(["verify", "T48", "--n", "9", "--params", "4", "--format", "csv"]) == 1
    (row,) = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert row["verdict"] == "FAIL" and row["found_value"] == row["claimed_value"] == "65/12"


def test_fuzz(capsys):
    assert main(["fuzz", "theta", "--trials", "200", "--seed", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["kind"] == "theta" and out["decrease"] == 0
