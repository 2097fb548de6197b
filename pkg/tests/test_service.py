"""Tests for the HTTP service endpoints."""

import pytest
from fastapi.testclient import TestClient

from weylmp.identities import IDENTITY_TAGS
from weylmp.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_identities_listing(client):
    response = client.get("/identities")
    assert response.status_code == 200
    tags = [entry["tag"] for entry in response.json()]
    assert tags == list(IDENTITY_TAGS)


def test_normalize(client):
    response = client.post("/normalize", json={"expression": "p^2*q^2"})
    assert response.status_code == 200
    assert response.json() == {
        "input": "p^2*q^2",
        "canonical": "q^2*p^2 + 4*q*p + 2",
    }


def test_normalize_parse_error(client):
    response = client.post("/normalize", json={"expression": "p^(-1)"})
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["code"] == "parse_error"
    assert detail["line"] == 1
    assert "negative exponent" in detail["message"]


def test_verify_grid(client):
    response = client.post(
        "/verify", json={"identity": "THM2", "m": [0, 3], "n": [0, 3]}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["all_pass"] is True
    assert body["passed"] == 16 and body["failed"] == 0 and body["errors"] == 0
    assert len(body["reports"]) == 16
    assert all(report["verdict"] == "pass" for report in body["reports"])


def test_verify_unknown_identity(client):
    response = client.post("/verify", json={"identity": "THM9"})
    assert response.status_code == 422


def test_verify_cap_errors_reported_per_cell(client):
    response = client.post(
        "/verify", json={"identity": "THM2", "m": [0, 1], "n": [0, 1], "cap": 0}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["all_pass"] is False
    assert body["errors"] == 4
    assert all(report["code"] == "cap_exceeded" for report in body["reports"])


def test_verify_bad_range(client):
    response = client.post("/verify", json={"identity": "THM1", "m": [3, 1]})
    assert response.status_code == 400
    assert response.json()["detail"]["code"] == "usage_error"


def test_verify_seed_changes_commutant_inputs(client):
    first = client.post(
        "/verify", json={"identity": "LEM2_COMMUTANT", "m": [0, 2], "seed": 1}
    ).json()
    second = client.post(
        "/verify", json={"identity": "LEM2_COMMUTANT", "m": [0, 2], "seed": 2}
    ).json()
    assert first["all_pass"] and second["all_pass"]
    assert first["reports"] != second["reports"]


def test_table_tmn(client):
    response = client.post("/table", json={"kind": "tmn", "max": 2})
    assert response.status_code == 200
    rows = response.json()["tmn_rows"]
    assert len(rows) == 6
    by_cell = {(row["m"], row["n"]): row for row in rows}
    assert by_cell[(1, 1)]["canonical"] == "2*q*p + 1"
    assert by_cell[(1, 1)]["words"] == 2


def test_table_mp(client):
    response = client.post("/table", json={"kind": "mp", "max": 2, "alpha": "1/2"})
    rows = response.json()["mp_rows"]
    assert [row["rendered"] for row in rows] == ["1", "x", "x^2 + 1"]
    assert rows[2]["coefficients"] == ["1", "0", "1"]


def test_table_bad_alpha(client):
    response = client.post("/table", json={"kind": "mp", "max": 1, "alpha": "pi"})
    assert response.status_code == 400


def test_bench(client):
    response = client.post("/bench", json={"max": 2, "reps": 1})
    assert response.status_code == 200
    rows = response.json()["rows"]
    assert len(rows) == 6
    assert all(row["closed_ms"] >= 0 for row in rows)
    assert rows[0] == {
        "m": 0,
        "n": 0,
        "words": 1,
        "closed_ms": rows[0]["closed_ms"],
        "rewrite_ms": rows[0]["rewrite_ms"],
        "speedup": rows[0]["speedup"],
    }


def test_suite_endpoint(client):
    response = client.post(
        "/suite", json={"max_total_degree": 2, "commutant_trials": 2}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["identity"] == "ALL"
    assert body["all_pass"] is True
    tags = {report["identity"] for report in body["reports"]}
    assert tags == set(IDENTITY_TAGS)


def test_verify_response_is_deterministic(client):
    payload = {"identity": "THM1", "m": [0, 2], "n": [0, 2]}
    first = client.post("/verify", json=payload)
    second = client.post("/verify", json=payload)
    assert first.content == second.content
