"""Command-line behavior through click's test runner."""
import json

import pytest
from click.testing import CliRunner

from dellac.cli import main

from anchors import P_REF, PI_REF, REF_TE7, TE2_ELEMENTS

REF_DOC = json.dumps({"kind": "te", "n": 7, "rows": list(REF_TE7)})


@pytest.fixture()
def runner():
    return CliRunner()


def _json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_enumerate_json(runner):
    body = _json(runner.invoke(main, ["enumerate", "te", "2"]))
    assert body["count"] == 3
    assert [tuple(item["rows"]) for item in body["items"]] == TE2_ELEMENTS


def test_enumerate_csv(runner):
    result = runner.invoke(main, ["--format", "csv", "enumerate", "te", "2"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "kind,n,rows"
    assert lines[1:] == ["te,2,1 1 2 2", "te,2,1 2 1 2", "te,2,1 2 2 1"]


def test_enumerate_count_only(runner):
    body = _json(runner.invoke(main, ["enumerate", "--count-only", "sdc", "4"]))
    assert body["count"] == 10


def test_enumerate_limit_truncates(runner):
    body = _json(runner.invoke(main, ["enumerate", "dc", "3", "--limit", "2"]))
    assert body["count"] == 2


def test_enumerate_odd_kind_marks_empty_row(runner):
    result = runner.invoke(main, ["--format", "csv", "enumerate", "to", "1"])
    lines = result.output.strip().splitlines()
    assert lines[1:] == ["to,1,1 - 1", "to,1,1 1 -"]


def test_enumerate_pistols(runner):
    body = _json(runner.invoke(main, ["enumerate", "sp", "2"]))
    assert [tuple(it["values"]) for it in body["items"]] == [
        (2, 2, 4, 4), (2, 4, 4, 4), (4, 2, 4, 4)]


def test_size_cap(runner, monkeypatch):
    monkeypatch.setenv("DELLAC_MAX_N", "2")
    result = runner.invoke(main, ["enumerate", "te", "3"])
    assert result.exit_code != 0
    assert "DELLAC_MAX_N" in result.output


def test_stats_from_stdin(runner):
    doc = json.dumps({"kind": "sdc", "n": 2, "rows": [1, 2, 1, 2]})
    body = _json(runner.invoke(main, ["stats", "--report", "inv"], input=doc))
    assert (body["inv"], body["tilde_inv"], body["bar_inv"]) == (1, 1, 0)


def test_stats_paths_from_file(runner, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(REF_DOC)
    body = _json(runner.invoke(main, ["stats", "--report", "paths",
                                      "--input", str(path)]))
    assert body["max"] == 4
    assert [tuple(p) for p in body["R"]] == [(4, 14), (7, 10)]


def test_stats_labels(runner):
    body = _json(runner.invoke(main, ["stats", "--report", "labels"],
                               input=REF_DOC))
    assert body["labels"]["2:13"] == "gamma"


def test_stats_rejects_invalid(runner):
    doc = json.dumps({"kind": "te", "n": 2, "rows": [2, 1, 1, 2]})
    result = runner.invoke(main, ["stats", "--report", "paths"], input=doc)
    assert result.exit_code != 0
    assert "invalid tableau" in result.output


def test_poincare(runner):
    body = _json(runner.invoke(main, ["poincare", "so", "4"]))
    assert body["coeffs"] == ["2", "4", "4"]


def test_poly_families(runner):
    assert _json(runner.invoke(main, ["poly", "D", "2"]))["coeffs"] == \
        ["12", "20", "8"]
    assert _json(runner.invoke(main, ["poly", "P", "4"]))["coeffs"] == \
        ["49", "110", "84", "24"]
    assert _json(runner.invoke(main, ["poly", "r", "3"]))["value"] == "10"
    assert _json(runner.invoke(main, ["poly", "L", "4"]))["value"] == "1024"
    triangle = _json(runner.invoke(main, ["poly", "c", "3"]))["rows"]
    assert triangle == [["1"], ["1", "2"], ["5", "10", "6"]]


def test_poly_csv(runner):
    result = runner.invoke(main, ["--format", "csv", "poly", "P", "3"])
    lines = result.output.strip().splitlines()
    assert lines[0] == "family,n,degree,coeff"
    assert lines[1:] == ["P,3,0,5", "P,3,1,10", "P,3,2,6"]


def test_map_pi(runner):
    body = _json(runner.invoke(main, ["map", "pi"], input=REF_DOC))
    assert tuple(body["tableau"]["rows"]) == PI_REF
    assert body["X"] == ["2:6", "2:11", "3:10", "4:12"]


def test_map_round_trip_via_documents(runner):
    doc = json.dumps({"tableau": {"kind": "te", "n": 2, "rows": [1, 2, 2, 1]},
                      "labels": {"2:3": 0, "1:4": 1}})
    body = _json(runner.invoke(main, ["map", "even-expand"], input=doc))
    back = _json(runner.invoke(main, ["map", "even-reduce"],
                               input=json.dumps(body)))
    assert tuple(back["tableau"]["rows"]) == (1, 2, 2, 1)
    assert back["labels"] == {"2:3": 0, "1:4": 1}


def test_map_pi_fiber(runner):
    body = _json(runner.invoke(main, ["map", "pi"], input=REF_DOC))
    fiber_doc = json.dumps({"tableau": body["tableau"], "X": body["X"]})
    fiber = _json(runner.invoke(main, ["map", "pi-fiber"], input=fiber_doc))
    assert [tuple(u["rows"]) for u in fiber["tableaux"]] == [REF_TE7]


def test_map_p_fiber(runner):
    doc = json.dumps({"tableau": {"kind": "to", "n": 6, "rows": list(P_REF)},
                      "l": {"2": "bg", "3": "b", "4": "r"}})
    body = _json(runner.invoke(main, ["map", "p-fiber"], input=doc))
    assert tuple(body["tableau"]["rows"]) == REF_TE7


def test_map_missing_payload(runner):
    result = runner.invoke(main, ["map", "pi-fiber"], input=REF_DOC)
    assert result.exit_code != 0
    assert "needs an X entry" in result.output


def test_verify_ok(runner):
    body = _json(runner.invoke(main, ["verify", "cf"]))
    assert body["ok"] is True


def test_verify_csv_lists_checks(runner):
    result = runner.invoke(main, ["--format", "csv", "verify", "pistols",
                                  "--max-n", "2"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "check,status,expected,actual,seconds"
    assert all(",ok," in line for line in lines[1:])


def test_verify_threads(runner):
    body = _json(runner.invoke(main, ["--threads", "4", "verify", "sequences",
                                      "--max-n", "2"]))
    assert body["ok"] is True


def test_verify_bad_suite(runner):
    result = runner.invoke(main, ["verify", "everything"])
    assert result.exit_code == 2


def test_render_to_file(runner, tmp_path):
    out = tmp_path / "t.svg"
    result = runner.invoke(main, ["render", "--overlay", "paths",
                                  "-o", str(out)], input=REF_DOC)
    assert result.exit_code == 0
    svg = out.read_text()
    assert svg.startswith("<svg ") and svg.endswith("</svg>")


def test_render_stdout(runner):
    result = runner.invoke(main, ["render"], input=REF_DOC)
    assert result.exit_code == 0
    assert result.output.startswith("<svg ")
