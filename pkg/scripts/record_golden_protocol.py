"""Record the canonical c5hat7 protocol exchange used by server and UI tests.

Replays the reference scenario (robber placed at 6, then standing still)
against a fresh in-process service and freezes every request/response
pair plus the final transcript.  Both test suites compare against this
file byte-for-byte at the JSON level, so regenerate it only on a
deliberate protocol change.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from copchase.server import create_app

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "golden_c5hat7_protocol.json"


def main() -> None:
    client = TestClient(create_app())
    create_body = {
        "graph": {"family": {"name": "c5hat7", "params": []}},
        "cops": 2,
        "u0": 0,
        "hints": False,
    }
    r = client.post("/session", json=create_body)
    r.raise_for_status()
    created = r.json()
    sid = created["id"]

    turns = []
    to = 6
    while True:
        body = {"to": to}
        resp = client.post(f"/session/{sid}/robber", json=body)
        resp.raise_for_status()
        payload = resp.json()
        turns.append({"request": body, "response": payload})
        if payload["captured"]:
            break
        to = payload["state"]["robber"]

    transcript = client.get(f"/session/{sid}/transcript").json()
    fixture = {
        "create": {"request": create_body, "response": created},
        "robber_turns": turns,
        "transcript": transcript,
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(fixture, indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT} with {len(turns)} robber turns; "
          f"captured at {transcript['outcome']['captured_at']}")


if __name__ == "__main__":
    main()
