/** Level-banded board layout.
 *
 * Pure presentation math: vertices are grouped into vertical bands so
 * the player can see the pursuit progress through the level structure.
 * Band 0 is the cops' start territory (u0 plus its guarded neighbors);
 * the remaining bands are breadth-first distance classes from u1 inside
 * the rest of the graph.  Before the robber places, u1 is unknown and
 * the bands are plain distance classes from u0.
 */

import type { GraphJson } from "./protocol.js";

export type Band = {
  index: number;
  kind: "start" | "level";
  vertices: number[];
};

export type Point = { x: number; y: number };

function adjacency(graph: GraphJson): Map<number, number[]> {
  const nbrs = new Map<number, number[]>();
  for (let v = 0; v < graph.n; v++) nbrs.set(v, []);
  for (const [u, v] of graph.edges) {
    nbrs.get(u)!.push(v);
    nbrs.get(v)!.push(u);
  }
  for (const list of nbrs.values()) list.sort((a, b) => a - b);
  return nbrs;
}

function bfsClasses(
  nbrs: Map<number, number[]>,
  sources: number[],
  blocked: Set<number>,
): number[][] {
  const dist = new Map<number, number>();
  let frontier = sources.filter((v) => !blocked.has(v));
  for (const v of frontier) dist.set(v, 0);
  const classes: number[][] = [];
  while (frontier.length > 0) {
    classes.push([...frontier].sort((a, b) => a - b));
    const next: number[] = [];
    for (const v of frontier) {
      for (const w of nbrs.get(v) ?? []) {
        if (!blocked.has(w) && !dist.has(w)) {
          dist.set(w, dist.get(v)! + 1);
          next.push(w);
        }
      }
    }
    frontier = next;
  }
  return classes;
}

export function levelBands(
  graph: GraphJson,
  u0: number,
  u1: number | null,
): Band[] {
  const nbrs = adjacency(graph);
  const bands: Band[] = [];
  if (u1 === null) {
    const classes = bfsClasses(nbrs, [u0], new Set());
    classes.forEach((vertices, i) =>
      bands.push({ index: i, kind: i === 0 ? "start" : "level", vertices }),
    );
  } else {
    const box = (nbrs.get(u0) ?? []).filter((v) => v !== u1);
    const start = [u0, ...box].sort((a, b) => a - b);
    bands.push({ index: 0, kind: "start", vertices: start });
    const blocked = new Set(start);
    const classes = bfsClasses(nbrs, [u1], blocked);
    classes.forEach((vertices, i) =>
      bands.push({ index: i + 1, kind: "level", vertices }),
    );
  }
  const placed = new Set(bands.flatMap((b) => b.vertices));
  const leftover = [];
  for (let v = 0; v < graph.n; v++) if (!placed.has(v)) leftover.push(v);
  if (leftover.length > 0) {
    bands.push({ index: bands.length, kind: "level", vertices: leftover });
  }
  return bands;
}

/** Spread the bands across a width x height box, one column per band. */
export function bandPositions(
  bands: Band[],
  width: number,
  height: number,
): Map<number, Point> {
  const pos = new Map<number, Point>();
  const cols = Math.max(bands.length, 1);
  for (const band of bands) {
    const x = ((band.index + 0.5) / cols) * width;
    const rows = band.vertices.length;
    band.vertices.forEach((v, i) => {
      pos.set(v, { x, y: ((i + 0.5) / rows) * height });
    });
  }
  return pos;
}
