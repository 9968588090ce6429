import pytest
from fastapi.testclient import TestClient

from toricheck.service import app

GOLDEN = {
    "num_params": 2,
    "vertices": [{"id": "v", "genus": 0}],
    "edges": [{"id": "e", "ends": ["v", "v"], "label": [1, 1]}],
}

THICK_LOOP = {
    "num_params": 2,
    "vertices": [{"id": "v"}],
    "edges": [{"id": "e", "ends": ["v", "v"], "label": [2, 0]}],
}


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_check_golden(client):
    r = client.post("/check", json={"graph": GOLDEN})
    assert r.status_code == 200
    verdicts = r.json()["verdicts"]
    assert {k: v["holds"] for k, v in verdicts.items()} == {
        "toric_additive": False, "aligned": True,
        "disciplined": False, "regular": False}
    assert verdicts["toric_additive"]["witness"] == {
        "domain_rank": 1, "codomain_ranks": [1, 1]}


def test_check_rejects_invalid_graph(client):
    bad = {"num_params": 1,
           "vertices": [{"id": "a"}, {"id": "b"}], "edges": []}
    r = client.post("/check", json={"graph": bad})
    assert r.status_code == 400
    assert "disconnected" in str(r.json()["detail"]["violations"])


def test_check_rejects_unknown_keys(client):
    g = dict(GOLDEN)
    g["extra"] = 1
    r = client.post("/check", json={"graph": g})
    assert r.status_code == 422


def test_contract(client):
    r = client.post("/contract", json={"graph": GOLDEN, "params": [1]})
    assert r.status_code == 200
    body = r.json()
    assert body["graph"]["num_params"] == 1
    assert body["graph"]["edges"][0]["label"] == [1]
    assert body["vertex_map"] == {"v": "v"}


def test_contract_bad_param(client):
    r = client.post("/contract", json={"graph": GOLDEN, "params": [9]})
    assert r.status_code == 400


def test_purity(client):
    r = client.post("/purity", json={"graph": GOLDEN})
    assert r.status_code == 200
    body = r.json()
    assert body["matrix"] == [[1], [1]]
    assert body["injective"] is True
    assert body["cokernel_free_rank"] == 1
    assert body["is_isomorphism"] is False


def test_resolve_refuses_golden(client):
    r = client.post("/resolve", json={"graph": GOLDEN})
    assert r.status_code == 200
    body = r.json()
    assert body["disciplined"] is False
    assert body["offending_edge"] == "e"


def test_resolve_thick_loop(client):
    r = client.post("/resolve", json={"graph": THICK_LOOP})
    assert r.status_code == 200
    body = r.json()
    assert body["disciplined"] is True
    assert [e["label"] for e in body["graph"]["edges"]] == [[1, 0], [1, 0]]
    assert body["trace"]["edge_trace"] == {"e.1": ["e", 1], "e.2": ["e", 2]}


def test_phi(client):
    r = client.post("/phi", json={"graph": THICK_LOOP, "param": 1})
    assert r.status_code == 200
    assert r.json() == {"param": 1, "invariant_factors": [2], "order": 2}


def test_random_deterministic(client):
    req = {"num_vertices": 5, "num_edges": 8, "num_params": 2, "seed": 77}
    a = client.post("/random", json=req)
    b = client.post("/random", json=req)
    assert a.status_code == b.status_code == 200
    assert a.json() == b.json()


def test_random_bad_config(client):
    r = client.post("/random", json={"num_vertices": 5, "num_edges": 1,
                                     "num_params": 2, "seed": 0})
    assert r.status_code == 400
