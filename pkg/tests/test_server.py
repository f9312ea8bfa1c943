"""The HTTP API surface."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from parley.engine import Engine
from parley.server import create_app
from parley.service import ConversationService


@pytest.fixture(scope="module")
def client():
    service = ConversationService(Engine())
    app = create_app(service)
    return TestClient(app)


def start(client, **body) -> str:
    response = client.post("/api/sessions", json=body)
    assert response.status_code == 200
    return response.json()["session_id"]


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_turn_payload_carries_the_full_turn_log(client):
    sid = start(client, seed=8)
    response = client.post(f"/api/sessions/{sid}/turns", json={"utterance": "hello"})
    assert response.status_code == 200
    payload = response.json()
    assert payload["response"]
    turn = payload["turn"]
    assert turn["turn_index"] == 1
    assert turn["action"] == "greet"
    assert turn["winner_rg"]
    assert isinstance(turn["candidates"], list) and turn["candidates"]
    assert {"rg_name", "status", "score", "body"} <= set(turn["candidates"][0])
    assert payload["topics"] == {"intro": 1}
    assert payload["user"] is None  # no account without a data dir


def test_session_state_accumulates(client):
    sid = start(client, seed=9)
    client.post(f"/api/sessions/{sid}/turns", json={"utterance": "hi"})
    client.post(f"/api/sessions/{sid}/turns", json={"utterance": "lets talk about tv"})
    state = client.get(f"/api/sessions/{sid}").json()
    assert len(state["turns"]) == 2
    assert state["current_topic"] == "tv"
    assert state["seed"] == 9
    assert state["topics"] == {"intro": 1, "tv": 1}


def test_end_session_and_error_mapping(client):
    sid = start(client, seed=10)
    client.post(f"/api/sessions/{sid}/turns", json={"utterance": "hi"})
    done = client.post(f"/api/sessions/{sid}/end", json={"rating": 5})
    assert done.status_code == 200
    assert done.json() == {"session_id": sid, "turns": 1, "rating": 5}
    # the session is gone now
    assert client.get(f"/api/sessions/{sid}").status_code == 404
    assert (
        client.post(f"/api/sessions/{sid}/turns", json={"utterance": "hi"}).status_code
        == 404
    )


def test_unknown_session_is_404(client):
    assert client.get("/api/sessions/doesnotexist").status_code == 404


def test_bad_rating_maps_to_400(client):
    sid = start(client, seed=11)
    response = client.post(f"/api/sessions/{sid}/end", json={"rating": 42})
    assert response.status_code == 400


def test_missing_utterance_is_a_validation_error(client):
    sid = start(client, seed=12)
    response = client.post(f"/api/sessions/{sid}/turns", json={})
    assert response.status_code == 422
