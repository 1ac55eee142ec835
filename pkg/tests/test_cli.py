"""The sylow-inv command line."""
import json

from sylow_inv.cli import main


def test_poly_show(capsys):
    assert main(["poly", "show", "--kind", "omega", "--s", "1", "--j", "-1", "--n", "6", "--q", "2"]) == 0
    out = capsys.readouterr().out.strip()
    assert "x1*x6^2" in out and "x3^2*x4" in out


def test_poly_show_json(capsys):
    assert main(["poly", "show", "--kind", "h", "--family", "o-plus", "--m", "2", "--q", "3", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 4 and data["field"] == [3, 1]


def test_group_dump(capsys):
    assert main(["group", "dump", "--family", "o-plus", "--m", "2", "--q", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 8
    assert data["generators"][-1]["label"] == "L"
    # entries are coefficient vectors
    assert data["generators"][0]["matrix"][0][0] == [1]


def test_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    args = ["verify", "--family", "sp", "--m", "2", "--q", "3", "--suites", "invariance", "--out", str(out)]
    assert main(args) == 0
    rep = json.loads(out.read_text())
    assert rep["summary"]["fail"] == 0
    assert main(args + ["--mutant", "omega-sign"]) == 1
    assert "FAIL invariance.h" in capsys.readouterr().out


def test_verify_bad_args(capsys):
    assert main(["verify", "--family", "sp", "--suites", "group"]) == 2
