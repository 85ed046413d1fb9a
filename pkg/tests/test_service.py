import pytest
from fastapi.testclient import TestClient

from bingdouble.bing import alpha
from bingdouble.habiro import s_sum
from bingdouble.laurent import LaurentV
from bingdouble.milnor import milnor_reduced
from bingdouble.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_alpha_endpoint(client):
    resp = client.post("/alpha", json={"m": 1, "n": 2})
    assert resp.status_code == 200
    body = resp.json()
    assert body["terms"] == [[0, "1"]]
    assert body["pretty_v"] == "1"
    assert body["pretty_q"] == "1"
    assert body["factored"] is None


def test_alpha_round_trips(client):
    body = client.post("/alpha", json={"m": 3, "n": 4}).json()
    assert LaurentV.from_json(body["terms"]) == alpha(3, 4)


def test_alpha_factored(client):
    body = client.post("/alpha", json={"m": 2, "n": 2, "factor_limit": 8}).json()
    factored = body["factored"]
    assert factored["limit"] == 8
    prod = LaurentV.from_json(factored["residual"])
    from bingdouble.qnum import cyclotomic_sym

    for l, e in factored["factors"]:
        prod = prod * cyclotomic_sym(l) ** e
    assert prod == alpha(2, 2)


def test_alpha_validation(client):
    assert client.post("/alpha", json={"m": -1, "n": 0}).status_code == 422
    assert client.post("/alpha", json={"m": 0}).status_code == 422


def test_xcoeff_endpoint(client):
    body = client.post("/xcoeff", json={"i": 1, "j": 1, "l": 1}).json()
    assert LaurentV.from_json(body["terms"]) == LaurentV({4: -1, -4: 1})
    assert body["pretty_v"] == "v^-4 - v^4"


def test_dltable_endpoint(client):
    body = client.post("/dltable", json={"l": 2, "m_max": 1, "n_max": 2}).json()
    assert body["l"] == 2
    assert body["cells"] == [[0, None, None], [None, 1, 0]]
    assert body["shaded"] == "n-less-than-m"
    assert body["csv"].splitlines()[0] == "m,0,1,2"


def test_milnor_endpoint(client):
    body = client.post("/milnor", json={"colors": [1, 1, 2, 2]}).json()
    assert LaurentV.from_json(body["terms"]) == milnor_reduced([1, 1, 2, 2])


def test_milnor_arity_rejected(client):
    resp = client.post("/milnor", json={"colors": [1, 1]})
    assert resp.status_code == 422
    assert resp.json()["error"] == "BadArity"


def test_borromean_endpoint(client):
    body = client.post("/borromean", json={"i": 1, "j": 2, "k": 1}).json()
    assert body["terms"] == []
    assert body["pretty_v"] == "0"


def test_ssum_endpoint(client):
    body = client.post("/ssum", json={"l": 1, "eps": -1, "eps2": 1}).json()
    assert LaurentV.from_json(body["terms"]) == s_sum(1, -1, 1)


def test_ssum_bad_sign(client):
    resp = client.post("/ssum", json={"l": 1, "eps": 2, "eps2": 1})
    assert resp.status_code == 422


def test_omega_endpoint(client):
    body = client.post("/omega", json={"p": 1, "n": 1}).json()
    assert body["terms"] == [[2, "1"]]
    assert body["pretty_q"] == "q"


def test_omega_odd_support_has_no_q_form(client):
    body = client.post("/omega", json={"p": 2, "n": 2}).json()
    if any(e % 2 for e, _ in body["terms"]):
        assert body["pretty_q"] is None


def test_mijk_endpoint(client):
    body = client.post("/mijk", json={"i": 0, "j": 0, "k": 0, "level": 5}).json()
    assert body["terms"] == [[0, "1"]]


def test_ohtsuki_c_endpoint(client):
    body = client.post("/ohtsuki-c", json={"order": 3}).json()
    assert body["order"] == 3
    assert body["coeffs"] == ["1/24", "-1/8", "59/288", "-17/72"]


def test_lambda_endpoint(client):
    body = client.post("/lambda", json={"i": 1, "j": 1, "k": 1, "order": 2}).json()
    assert body["coeffs"] == ["1", "-6", "45"]


def test_evalroot_endpoint(client):
    payload = {"terms": [[8, "1"], [0, "-1"]], "m": 4}
    body = client.post("/evalroot", json=payload).json()
    assert body == {"m": 4, "coeffs": ["0", "0"]}


def test_evalroot_odd_support_rejected(client):
    resp = client.post("/evalroot", json={"terms": [[1, "1"]], "m": 4})
    assert resp.status_code == 422
    assert resp.json()["error"] == "OddHalfPower"


def test_verify_endpoint(client):
    body = client.post("/verify", json={"level": "fast", "checks": ["c_series"]}).json()
    assert body["level"] == "fast"
    assert body["pass"] is True
    assert [r["name"] for r in body["reports"]] == ["c_series"]


def test_verify_rejects_unknown_check(client):
    resp = client.post("/verify", json={"level": "fast", "checks": ["nope"]})
    assert resp.status_code == 422


def test_verify_rejects_bad_level(client):
    resp = client.post("/verify", json={"level": "extreme"})
    assert resp.status_code == 422
