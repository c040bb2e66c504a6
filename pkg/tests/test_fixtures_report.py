import csv
import io
import json

import pytest

from hullforge.eaqecc import generate_table
from hullforge.fixtures import FIXTURES, compare_fixture, load_fixture
from hullforge.report import CSV_COLUMNS, render_figure, to_csv, to_json, to_markdown


@pytest.mark.parametrize("name,count", [("table1", 20), ("table2", 26), ("table3", 22)])
def test_fixture_sizes(name, count):
    doc = load_fixture(name)
    assert doc["schema"] == "hullforge.fixture/1"
    assert len(doc["rows"]) == count
    assert all(set(r) == {"q", "k", "ell", "n", "kappa", "d", "c"} for r in doc["rows"])


def test_fixture_spot_values():
    t1 = load_fixture("table1")["rows"]
    assert t1[0] == {"q": 9, "k": 3, "ell": 1, "n": 72, "kappa": 68, "d": 4, "c": 2}
    t3 = {(r["q"], r["ell"]): r for r in load_fixture("table3")["rows"]}
    # printed values are kept verbatim, misprints included
    assert t3[(5, 3)]["c"] == 3
    assert t3[(13, 12)]["kappa"] == 141


def test_unknown_fixture():
    with pytest.raises(ValueError):
        load_fixture("table9")


def test_compare_reports_mismatch_missing_extra():
    ref = load_fixture("table3")["rows"]
    rows = [dict(r) for r in ref if r["q"] == 7]
    rows[0]["c"] += 1
    rows.pop()
    rows.append({"q": 7, "k": 7, "ell": 7, "n": 50, "kappa": 36, "d": 8, "c": 0})
    diff = compare_fixture("table3", rows)
    assert diff.total == 6 and diff.matched == 4 and not diff.ok
    assert len(diff.mismatches) == 1 and len(diff.missing) == 1 and len(diff.extra) == 1
    text = "\n".join(diff.lines())
    assert text.startswith("4/6 rows match")
    assert "mismatch q=7 k=7 ell=1" in text


@pytest.fixture(scope="module")
def small_rows():
    return generate_table("t4.10", 3)


def test_csv(small_rows):
    text = to_csv(small_rows)
    reader = list(csv.DictReader(io.StringIO(text)))
    assert tuple(reader[0]) == CSV_COLUMNS
    assert reader[0] == {"k": "3", "ell": "1", "n": "10", "kappa": "6", "d": "4", "c": "2", "q": "3"}


def test_json(small_rows):
    doc = json.loads(to_json(small_rows, "t4.10", payload=False, fixture={"name": "x"}))
    assert doc["schema"] == "hullforge.table/1" and doc["fixture"] == {"name": "x"}
    assert "basis" not in doc["rows"][0]["code"]["certificate"]


def test_markdown(small_rows):
    lines = to_markdown(small_rows).splitlines()
    assert lines[0].startswith("| q | k | ell")
    assert "[[10,6,4;2]]_3" in lines[2]


def test_figure(small_rows, tmp_path):
    out = tmp_path / "fig.png"
    render_figure(small_rows, out, title="demo")
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_all_fixtures_listed():
    assert FIXTURES == ("table1", "table2", "table3")
