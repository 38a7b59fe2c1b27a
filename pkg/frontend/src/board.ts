/** Board model: a pure projection of the last service response.
 *
 * No game rules live here.  Legality comes from the server's
 * legal_moves list, positions from its state object, and the move log
 * from the robber clicks plus the cop_moves the server returned.
 */

import { levelBands, type Band } from "./layout.js";
import type { CopMove, ServerState } from "./protocol.js";

export type LogEntry = CopMove;

export type CopToken = { name: string; at: number };

export type BoardModel = {
  graph: ServerState["graph"];
  bands: Band[];
  cops: CopToken[];
  robber: number | null;
  u0: number;
  u1: number | null;
  legal: ReadonlySet<number>;
  hints: ReadonlyMap<number, number | null> | null;
  phase: ServerState["phase"];
  round: number;
  captured: boolean;
  capturedAt: number | null;
  bound: number;
  log: readonly LogEntry[];
};

export function project(state: ServerState, log: readonly LogEntry[]): BoardModel {
  const hints =
    state.hints === null
      ? null
      : new Map(
          Object.entries(state.hints).map(([v, s]) => [Number(v), s] as const),
        );
  return {
    graph: state.graph,
    bands: levelBands(state.graph, state.u0, state.u1),
    cops: state.cop_names.map((name, i) => ({ name, at: state.cops[i]! })),
    robber: state.robber,
    u0: state.u0,
    u1: state.u1,
    legal: new Set(state.legal_moves),
    hints,
    phase: state.phase,
    round: state.round,
    captured: state.captured,
    capturedAt: state.captured_at,
    bound: state.bound,
    log,
  };
}

/** A click is meaningful only when the server listed the vertex. */
export function canClick(board: BoardModel, v: number): boolean {
  return !board.captured && board.legal.has(v);
}

export function appendRobberMove(
  log: readonly LogEntry[],
  board: BoardModel,
  to: number,
): LogEntry[] {
  const from = board.robber === null ? to : board.robber;
  return [...log, { actor: "robber", from, to, step: null }];
}

export function appendCopMoves(
  log: readonly LogEntry[],
  moves: CopMove[],
): LogEntry[] {
  return [...log, ...moves];
}
