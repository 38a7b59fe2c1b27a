import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import {
  appendCopMoves,
  appendRobberMove,
  canClick,
  project,
  type LogEntry,
} from "../src/board.js";
import type { ServerState } from "../src/protocol.js";

const golden = JSON.parse(
  readFileSync(
    new URL("../../tests/fixtures/golden_c5hat7_protocol.json", import.meta.url),
    "utf-8",
  ),
);

const createdState: ServerState = golden.create.response.state;
const lastTurn = golden.robber_turns[golden.robber_turns.length - 1];

describe("board projection", () => {
  it("projects the freshly created session", () => {
    const board = project(createdState, []);
    expect(board.robber).toBeNull();
    expect(board.u0).toBe(0);
    expect(board.u1).toBeNull();
    expect([...board.legal].sort((a, b) => a - b)).toEqual([0, 1, 2, 3, 4, 5, 6]);
    expect(board.cops.map((c) => c.at)).toEqual([0, 0]);
    expect(board.cops.map((c) => c.name)).toEqual(["c1", "c2"]);
    expect(board.bound).toBe(14);
    expect(board.captured).toBe(false);
    expect(board.log).toEqual([]);
  });

  it("projects the captured endgame", () => {
    const board = project(lastTurn.response.state, []);
    expect(board.captured).toBe(true);
    expect(board.capturedAt).toBe(6);
    expect(board.phase).toBe("captured");
    expect(board.legal.size).toBe(0);
  });

  it("keeps hints null when the server sends none", () => {
    expect(project(createdState, []).hints).toBeNull();
  });

  it("converts hint keys to vertex numbers", () => {
    const state: ServerState = {
      ...createdState,
      hints: { "0": 3, "4": null },
    };
    const board = project(state, []);
    expect(board.hints?.get(0)).toBe(3);
    expect(board.hints?.get(4)).toBeNull();
    expect(board.hints?.has(1)).toBe(false);
  });
});

describe("click legality", () => {
  it("allows only server-listed vertices", () => {
    const board = project(createdState, []);
    expect(canClick(board, 6)).toBe(true);
    expect(canClick(board, 99)).toBe(false);
  });

  it("allows nothing once captured", () => {
    const captured = project(
      { ...createdState, captured: true, legal_moves: [1, 2] },
      [],
    );
    expect(canClick(captured, 1)).toBe(false);
  });
});

describe("move log", () => {
  it("records placement with from equal to the destination", () => {
    const board = project(createdState, []);
    const log = appendRobberMove([], board, 6);
    expect(log).toEqual([{ actor: "robber", from: 6, to: 6, step: null }]);
  });

  it("records real moves from the current robber vertex", () => {
    const placed = project(golden.robber_turns[0].response.state, []);
    const log = appendRobberMove([], placed, 6);
    expect(log[0]).toEqual({ actor: "robber", from: 6, to: 6, step: null });
  });

  it("never mutates an earlier log", () => {
    const board = project(createdState, []);
    const first: LogEntry[] = [];
    const second = appendRobberMove(first, board, 6);
    const third = appendCopMoves(second, golden.robber_turns[0].response.cop_moves);
    expect(first).toHaveLength(0);
    expect(second).toHaveLength(1);
    expect(third.length).toBeGreaterThan(1);
    expect(third.slice(0, 1)).toEqual(second);
  });

  it("replaying every golden turn rebuilds the transcript", () => {
    let log: LogEntry[] = [];
    let board = project(createdState, log);
    for (const turn of golden.robber_turns) {
      log = appendRobberMove(log, board, turn.request.to);
      log = appendCopMoves(log, turn.response.cop_moves);
      board = project(turn.response.state, log);
    }
    expect(log).toEqual(golden.transcript.moves);
    expect(board.log).toBe(log);
  });
});
