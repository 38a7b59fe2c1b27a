/** SVG rendering of a BoardModel.  Draws exactly what the model holds;
 *  all interaction decisions are made by the caller. */

import { bandPositions } from "./layout.js";
import type { BoardModel } from "./board.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 760;
const HEIGHT = 420;
const RADIUS = 16;

export type RenderHandlers = {
  onVertexClick: (v: number) => void;
};

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

export function renderBoard(
  board: BoardModel,
  container: HTMLElement,
  handlers: RenderHandlers,
): void {
  container.textContent = "";
  const svg = el("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: "board",
    role: "img",
  });
  const pos = bandPositions(board.bands, WIDTH, HEIGHT - 40);

  for (const band of board.bands) {
    const x = ((band.index + 0.5) / board.bands.length) * WIDTH;
    const label = el("text", {
      x: String(x),
      y: String(HEIGHT - 12),
      class: `band-label band-${band.kind}`,
      "text-anchor": "middle",
    });
    label.textContent = band.kind === "start" ? "start" : `L${band.index}`;
    svg.appendChild(label);
  }

  for (const [u, v] of board.graph.edges) {
    const a = pos.get(u)!;
    const b = pos.get(v)!;
    svg.appendChild(
      el("line", {
        x1: String(a.x),
        y1: String(a.y),
        x2: String(b.x),
        y2: String(b.y),
        class: "edge",
      }),
    );
  }

  const copsAt = new Map<number, string[]>();
  for (const cop of board.cops) {
    const list = copsAt.get(cop.at) ?? [];
    list.push(cop.name);
    copsAt.set(cop.at, list);
  }

  for (let v = 0; v < board.graph.n; v++) {
    const p = pos.get(v)!;
    const group = el("g", { class: "vertex", "data-vertex": String(v) });
    const classes = ["node"];
    if (board.legal.has(v) && !board.captured) classes.push("legal");
    if (v === board.robber) classes.push("robber");
    if (copsAt.has(v)) classes.push("cop");
    if (v === board.u0) classes.push("u0");
    const circle = el("circle", {
      cx: String(p.x),
      cy: String(p.y),
      r: String(RADIUS),
      class: classes.join(" "),
    });
    const hint = board.hints?.get(v);
    if (hint !== undefined) {
      const tip = el("title", {});
      tip.textContent =
        hint === null ? `${v}: safe forever` : `${v}: survives ${hint} rounds`;
      circle.appendChild(tip);
    }
    group.appendChild(circle);
    const label = el("text", {
      x: String(p.x),
      y: String(p.y + 4),
      "text-anchor": "middle",
      class: "node-label",
    });
    label.textContent = copsAt.has(v)
      ? `${v}:${copsAt.get(v)!.join("+")}`
      : v === board.robber
        ? `${v}:R`
        : String(v);
    group.appendChild(label);
    group.addEventListener("click", () => handlers.onVertexClick(v));
    svg.appendChild(group);
  }

  container.appendChild(svg);
}

export function renderLog(board: BoardModel, list: HTMLElement): void {
  list.textContent = "";
  board.log.forEach((entry, i) => {
    const item = document.createElement("li");
    const step = entry.step === null ? "" : ` [${entry.step}]`;
    item.textContent =
      entry.from === entry.to
        ? `${i + 1}. ${entry.actor} stays at ${entry.to}${step}`
        : `${i + 1}. ${entry.actor} ${entry.from} -> ${entry.to}${step}`;
    list.appendChild(item);
  });
}

export function renderStatus(board: BoardModel, target: HTMLElement): void {
  if (board.captured) {
    target.textContent = `captured at round ${board.capturedAt} (bound ${board.bound})`;
  } else if (board.phase === "robber_place") {
    target.textContent = `place the robber; capture bound ${board.bound}`;
  } else {
    target.textContent = `round ${board.round}; your move (bound ${board.bound})`;
  }
}

export function showCaptureModal(board: BoardModel, modal: HTMLElement): void {
  modal.textContent = "";
  const box = document.createElement("div");
  box.className = "modal-box";
  const head = document.createElement("h2");
  head.textContent = "Captured";
  const body = document.createElement("p");
  body.textContent = `${board.capturedAt} ≤ ${board.bound}`;
  const close = document.createElement("button");
  close.textContent = "close";
  close.addEventListener("click", () => modal.classList.remove("open"));
  box.append(head, body, close);
  modal.appendChild(box);
  modal.classList.add("open");
}

export function showError(message: string, banner: HTMLElement): void {
  banner.textContent = message;
  banner.classList.add("visible");
}

export function clearError(banner: HTMLElement): void {
  banner.textContent = "";
  banner.classList.remove("visible");
}

export function flashIllegal(container: HTMLElement): void {
  container.classList.remove("flash");
  void container.offsetWidth;
  container.classList.add("flash");
}
