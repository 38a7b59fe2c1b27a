/** App wiring: forms, one strictly-sequential session per tab. */

import {
  appendCopMoves,
  appendRobberMove,
  canClick,
  project,
  type BoardModel,
  type LogEntry,
} from "./board.js";
import {
  fetchTransport,
  ProtocolError,
  SessionClient,
  type CreateRequest,
  type GraphChoice,
} from "./protocol.js";
import {
  clearError,
  flashIllegal,
  renderBoard,
  renderLog,
  renderStatus,
  showCaptureModal,
  showError,
} from "./render.js";

type App = {
  client: SessionClient | null;
  sessionId: string | null;
  log: LogEntry[];
  board: BoardModel | null;
};

const app: App = { client: null, sessionId: null, log: [], board: null };

const FAMILIES: Record<string, { name: string; params: number[] }> = {
  c5hat7: { name: "c5hat7", params: [] },
  twoclique7: { name: "twoclique7", params: [] },
  wheel5: { name: "wheel5", params: [] },
  hung_wheel5: { name: "hung_wheel5", params: [] },
  "odd_cycle(9)": { name: "odd_cycle", params: [9] },
  "c5_gluing(2)": { name: "c5_gluing", params: [2] },
  "path(8)": { name: "path", params: [8] },
  "petersen (rejected: outside the class)": { name: "petersen", params: [] },
};

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function redraw(): void {
  if (!app.board) return;
  renderBoard(app.board, byId("board"), { onVertexClick: handleClick });
  renderLog(app.board, byId("log"));
  renderStatus(app.board, byId("status"));
}

function describeDetail(err: unknown): string {
  if (err instanceof ProtocolError) {
    const d = err.detail as Record<string, unknown> | null;
    if (d && typeof d === "object") {
      const parts = [String(d["error"] ?? err.message)];
      if (d["claw"]) parts.push(`claw witness: ${JSON.stringify(d["claw"])}`);
      if (d["even_hole"]) {
        parts.push(`even hole witness: ${JSON.stringify(d["even_hole"])}`);
      }
      return parts.join("; ");
    }
    return err.message;
  }
  return err instanceof Error ? err.message : String(err);
}

async function startSession(): Promise<void> {
  const base = byId<HTMLInputElement>("server").value.replace(/\/+$/, "");
  const cops = Number(byId<HTMLSelectElement>("cops").value);
  const hints = byId<HTMLInputElement>("hints").checked;
  const familyKey = byId<HTMLSelectElement>("family").value;
  const custom = byId<HTMLTextAreaElement>("edgelist").value.trim();
  const graph: GraphChoice = custom
    ? { edge_list: custom + "\n" }
    : { family: FAMILIES[familyKey]! };
  const body: CreateRequest = { graph, cops, u0: 0, hints };

  clearError(byId("error"));
  const client = new SessionClient(base, fetchTransport());
  try {
    const created = await client.createSession(body);
    app.client = client;
    app.sessionId = created.id;
    app.log = [];
    app.board = project(created.state, app.log);
    byId("modal").classList.remove("open");
    redraw();
  } catch (err) {
    showError(describeDetail(err), byId("error"));
  }
}

async function handleClick(v: number): Promise<void> {
  if (!app.client || !app.sessionId || !app.board) return;
  if (app.client.busy) return;
  if (!canClick(app.board, v)) {
    flashIllegal(byId("board"));
    return;
  }
  const logWithRobber = appendRobberMove(app.log, app.board, v);
  try {
    const resp = await app.client.robberMove(app.sessionId, v);
    app.log = appendCopMoves(logWithRobber, resp.cop_moves);
    app.board = project(resp.state, app.log);
    redraw();
    if (resp.captured) showCaptureModal(app.board, byId("modal"));
  } catch (err) {
    showError(describeDetail(err), byId("error"));
  }
}

function fillFamilies(): void {
  const select = byId<HTMLSelectElement>("family");
  for (const key of Object.keys(FAMILIES)) {
    const opt = document.createElement("option");
    opt.value = key;
    opt.textContent = key;
    select.appendChild(opt);
  }
}

fillFamilies();
byId("start").addEventListener("click", () => void startSession());
