"""Record a scripted session over the wire API as a frontend fixture.

The web client's tests replay these exact payloads through the
view-model functions, so the fixture must be regenerated whenever the
wire format or the engine's scripted behavior changes:

    python3 scripts/record_ui_fixture.py
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from parley.server import create_app

OUT = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixture.json"

SEED = 42
SCRIPT = [
    "hi there",
    "my name is dana",
    "lets talk about movies",
    "i loved the dark knight",
    "christian bale was amazing",
    "he is so talented",
    "what can we talk about",
    "books",
    "i love the hobbit",
    "tell me a fun fact",
]


def main() -> None:
    client = TestClient(create_app())
    created = client.post("/api/sessions", json={"seed": SEED}).json()
    turns = []
    for utterance in SCRIPT:
        response = client.post(
            f"/api/sessions/{created['session_id']}/turns",
            json={"utterance": utterance},
        )
        response.raise_for_status()
        turns.append({"utterance": utterance, "payload": response.json()})
    state = client.get(f"/api/sessions/{created['session_id']}").json()

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(
        {"seed": SEED, "create": created, "turns": turns, "state": state},
        indent=2, sort_keys=True,
    ) + "\n", encoding="utf-8")
    menu_turns = [t["payload"]["turn"]["turn_index"] for t in turns
                  if t["payload"]["turn"]["menu_options"]]
    print(f"wrote {OUT} ({len(turns)} turns, menu at {menu_turns})")


if __name__ == "__main__":
    main()
