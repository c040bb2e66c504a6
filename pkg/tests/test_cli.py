import json
import subprocess
import sys

import pytest

from hullforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_smallfield(capsys):
    code, out, _ = run(capsys, "construct", "--theorem", "t3.5", "--q", "5", "--n", "5", "--k", "2", "--ell", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["certificate"]["dim"] == 1
    assert doc["theorem"] == "t3.5" and doc["schema"] == "hullforge.code/1"


def test_construct_full_field_default_k(capsys):
    code, out, _ = run(capsys, "construct", "--theorem", "t3.11", "--q", "5", "--ell", "1")
    doc = json.loads(out)
    assert code == 0 and len(doc["a"]) + doc["extended"] == 26


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--theorem", "t3.5", "--q", "5", "--n", "9", "--k", "2", "--ell", "1"],
        ["construct", "--theorem", "t3.5", "--q", "6", "--n", "3", "--k", "1", "--ell", "1"],
        ["construct", "--theorem", "t3.6i", "--q", "5", "--k", "1", "--ell", "1"],
        ["construct", "--theorem", "t3.5", "--q", "5", "--n", "5", "--ell", "1"],
        ["table", "--family", "t4.8i", "--q", "9"],
    ],
)
def test_precondition_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def write_code(tmp_path, capsys, *argv):
    path = tmp_path / "code.json"
    assert main(["construct", *argv, "--out", str(path)]) == 0
    capsys.readouterr()
    return path


def test_verify_round_trip_with_oracle(tmp_path, capsys):
    path = write_code(tmp_path, capsys, "--theorem", "t3.5", "--q", "5", "--n", "5", "--k", "2", "--ell", "1")
    code, out, _ = run(capsys, "verify", "--in", str(path), "--oracle")
    report = json.loads(out)
    assert code == 0 and report["status"] == "ok"
    assert report["oracle"] == {"hull_enum": 1, "min_distance_enum": 4, "mds_minor_check": True}
    assert report["regenerated"] == "identical"


def test_verify_tampered_v(tmp_path, capsys):
    path = write_code(tmp_path, capsys, "--theorem", "t3.5", "--q", "5", "--n", "5", "--k", "2", "--ell", "1")
    doc = json.loads(path.read_text())
    doc["v"][-1] = 1 if doc["v"][-1] != 1 else 2
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", "--in", str(path))
    assert code == 3 and "error" in err


def test_verify_tampered_dimension(tmp_path, capsys):
    path = write_code(tmp_path, capsys, "--theorem", "t3.4", "--q", "13", "--n", "5", "--k", "3", "--ell", "1")
    doc = json.loads(path.read_text())
    doc["certificate"]["dim"] = 2
    path.write_text(json.dumps(doc))
    assert run(capsys, "verify", "--in", str(path))[0] == 3


def test_verify_budget_strict(tmp_path, capsys, monkeypatch):
    path = write_code(tmp_path, capsys, "--theorem", "t3.11", "--q", "3", "--ell", "1")
    monkeypatch.setenv("HULLFORGE_BUDGET", "enum=10,minor=5,hull=10")
    code, out, _ = run(capsys, "verify", "--in", str(path), "--oracle")
    assert code == 0 and json.loads(out)["oracle"]["hull_enum"].startswith("skipped")
    assert run(capsys, "verify", "--in", str(path), "--oracle", "--strict")[0] == 4


def test_verify_bare_code_needs_kind(tmp_path, capsys):
    path = tmp_path / "bare.json"
    path.write_text(json.dumps({"field": {"p": 5, "m": 1}, "a": [0, 1, 2, 3], "v": [1, 1, 1, 1], "k": 2, "extended": False}))
    assert run(capsys, "verify", "--in", str(path))[0] == 2
    code, out, _ = run(capsys, "verify", "--in", str(path), "--kind", "euclidean")
    assert code == 0 and json.loads(out)["dim"] == 1


def test_table_fixture_match(capsys, tmp_path):
    fig = tmp_path / "t.png"
    code, out, err = run(capsys, "table", "--family", "t4.10", "--q", "7", "--paper-fixture", "table3", "--figure", str(fig))
    assert code == 0
    assert "6/6 rows match" in err
    assert out.splitlines()[0] == "k,ell,n,kappa,d,c,q"
    assert fig.exists()


def test_table_fixture_mismatch_exit(capsys):
    code, _, err = run(capsys, "table", "--family", "t4.10", "--q", "5", "--paper-fixture", "table3")
    assert code == 1
    assert "3/4 rows match" in err and "mismatch q=5 k=5 ell=3" in err


def test_table_json_and_ranges(capsys, tmp_path):
    out_path = tmp_path / "t.json"
    code, _, _ = run(
        capsys, "table", "--family", "t4.9i", "--q", "5", "--nprime", "6", "--t", "4",
        "--k-min", "2", "--ell-min", "1", "--ell-max", "1", "--format", "json", "--no-payload", "--out", str(out_path),
    )
    doc = json.loads(out_path.read_text())
    assert code == 0
    assert {(r["k"], r["ell"]) for r in doc["rows"]} == {(2, 1), (3, 1), (4, 1)}
    assert "a" in doc["rows"][0]["code"] and "basis" not in doc["rows"][0]["code"]["certificate"]


def test_markdown(capsys):
    code, out, _ = run(capsys, "table", "--family", "t4.6", "--q", "5", "--n", "5", "--format", "markdown")
    assert code == 0 and "[[5,2,3;1]]_5" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hullforge", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "construct" in proc.stdout
