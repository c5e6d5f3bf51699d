"""HTTP layer round trips against the in-process app."""
import pytest
from fastapi.testclient import TestClient

from dellac.service import create_app

from anchors import P_REF, PI_REF, REF_TE7, SDC4_FROM_TE2, TE2_ELEMENTS

REF_DOC = {"kind": "te", "n": 7, "rows": list(REF_TE7)}


@pytest.fixture()
def client():
    with TestClient(create_app()) as c:
        yield c


def test_index(client):
    body = client.get("/").json()
    assert body["name"] == "dellac"
    assert body["max_n"] >= 1


def test_enumerate(client):
    body = client.post("/enumerate", json={"kind": "te", "n": 2}).json()
    assert body["count"] == 3 and not body["truncated"]
    assert [tuple(item["rows"]) for item in body["items"]] == TE2_ELEMENTS


def test_enumerate_truncates(client):
    body = client.post("/enumerate", json={"kind": "dc", "n": 4, "limit": 5}).json()
    assert body["count"] == 5 and body["truncated"]


def test_enumerate_respects_cap(client, monkeypatch):
    monkeypatch.setenv("DELLAC_MAX_N", "3")
    r = client.post("/enumerate", json={"kind": "dc", "n": 4})
    assert r.status_code == 422


def test_stats_inversions(client):
    doc = {"kind": "sdc", "n": 2, "rows": [1, 2, 1, 2]}
    body = client.post("/stats", json={"tableau": doc, "report": "inv"}).json()
    assert (body["inv"], body["tilde_inv"], body["bar_inv"]) == (1, 1, 0)


def test_stats_paths(client):
    body = client.post("/stats",
                       json={"tableau": REF_DOC, "report": "paths"}).json()
    assert body["max"] == 4 and body["fr"] == 6
    assert [tuple(p) for p in body["B"]] == [(2, 7), (3, 12), (7, 11)]


def test_stats_labels(client):
    body = client.post("/stats",
                       json={"tableau": REF_DOC, "report": "labels"}).json()
    assert body["labels"]["2:7"] == "beta"
    assert body["labels"]["4:14"] == "rho"


def test_stats_wrong_kind(client):
    r = client.post("/stats", json={"tableau": REF_DOC, "report": "inv"})
    assert r.status_code == 422


def test_invalid_tableau_rejected(client):
    doc = {"kind": "te", "n": 2, "rows": [2, 1, 1, 2]}
    r = client.post("/stats", json={"tableau": doc, "report": "paths"})
    assert r.status_code == 422


def test_poincare(client):
    body = client.post("/poincare", json={"variety": "sp", "n": 4}).json()
    assert body["coeffs"] == ["1", "2", "3", "3", "1"]


def test_poly(client):
    body = client.post("/poly", json={"family": "P", "n": 3}).json()
    assert body["coeffs"] == ["5", "10", "6"]
    body = client.post("/poly", json={"family": "r", "n": 3}).json()
    assert body["value"] == "10"
    body = client.post("/poly", json={"family": "cf", "n": 2}).json()
    assert body["coeffs_by_t"] == [["1"], ["0", "1"], ["0", "1", "2"]]


def test_map_pi(client):
    body = client.post("/map", json={"op": "pi", "tableau": REF_DOC}).json()
    assert tuple(body["tableau"]["rows"]) == PI_REF
    assert body["X"] == ["2:6", "2:11", "3:10", "4:12"]


def test_map_expand_round_trip(client):
    doc = {"kind": "te", "n": 2, "rows": [1, 2, 2, 1]}
    labels = {"2:3": 0, "1:4": 1}
    body = client.post("/map", json={"op": "even-expand", "tableau": doc,
                                     "labels": labels}).json()
    assert tuple(body["tableau"]["rows"]) == SDC4_FROM_TE2
    back = client.post("/map", json={"op": "even-reduce",
                                     "tableau": body["tableau"]}).json()
    assert tuple(back["tableau"]["rows"]) == (1, 2, 2, 1)
    assert back["labels"] == {"2:3": 0, "1:4": 1}


def test_map_p_fiber(client):
    doc = {"kind": "to", "n": 6, "rows": list(P_REF)}
    body = client.post("/map", json={"op": "p-fiber", "tableau": doc,
                                     "l": {"2": "bg", "3": "b", "4": "r"}}).json()
    assert tuple(body["tableau"]["rows"]) == REF_TE7
    assert body["recovered"] == {"2": "bg", "3": "b", "4": "r"}


def test_map_needs_payload(client):
    r = client.post("/map", json={"op": "pi-fiber", "tableau": REF_DOC})
    assert r.status_code == 422


def test_verify_endpoint(client):
    body = client.post("/verify", json={"suite": "cf"}).json()
    assert body["ok"] is True
    assert body["checks"]


def test_render_endpoint(client):
    r = client.post("/render", json={"tableau": REF_DOC, "overlay": "paths"})
    assert r.status_code == 200
    assert r.headers["content-type"].startswith("image/svg+xml")
    assert r.text.startswith("<svg ")
