"""Membership tests for the claw-free, even-hole-free graph class.

A claw is an induced star on four vertices; a hole is a chordless cycle
of length at least four.  Hole enumeration runs a DFS over induced paths
anchored at each cycle's least vertex, pruning as soon as a chord back
to the anchor path appears, so every chordless cycle is produced exactly
once and already in canonical form.  The DFS carries a node budget and
aborts with BudgetExceededError rather than silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError, DomainError
from .graphs import Graph, _bits

DEFAULT_HOLE_BUDGET = 5_000_000


@dataclass(frozen=True)
class ClassReport:
    """Outcome of a membership test with witnesses for both detectors."""

    member: bool
    claw: tuple[int, int, int, int] | None
    even_hole: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "claw": list(self.claw) if self.claw else None,
            "even_hole": list(self.even_hole) if self.even_hole else None,
        }


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """Lexicographically least claw as (center, leaf1, leaf2, leaf3), or None.

    Centers are scanned in increasing order and leaf triples in
    lexicographic order, so the first hit is the least witness overall.
    """
    for c in g.vertices():
        nbrs = g.neighbors(c)
        if len(nbrs) < 3:
            continue
        for a, b, d in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return (c, a, b, d)
    return None


def canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate/reflect so the least vertex leads and its smaller neighbor follows."""
    k = len(cycle)
    i = cycle.index(min(cycle))
    forward = tuple(cycle[(i + j) % k] for j in range(k))
    backward = tuple(cycle[(i - j) % k] for j in range(k))
    return forward if forward[1] < backward[1] else backward


class _HoleSearch:
    """Shared DFS core for hole enumeration and the even-hole finder."""

    def __init__(self, g: Graph, max_len: int, budget: int):
        self.g = g
        self.max_len = max_len
        self.budget = budget
        self.nodes = 0
        self.found: list[tuple[int, ...]] = []

    def _charge(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"hole enumeration budget of {self.budget} nodes exceeded"
            )

    def run(self):
        for a in self.g.vertices():
            for b in self.g.neighbors(a):
                if b > a:
                    self._extend(a, [a, b], (1 << a) | (1 << b))
        return self

    def _extend(self, a: int, path: list[int], path_mask: int):
        self._charge()
        g = self.g
        last = path[-1]
        internal = path_mask & ~(1 << a) & ~(1 << last)
        candidates = g.mask(last) & ~path_mask
        for y in _bits(candidates):
            if y < a or g.mask(y) & internal:
                continue
            if g.has_edge(y, a):
                # y can only close the cycle; extending past it would chord.
                if len(path) >= 3 and len(path) + 1 <= self.max_len and path[1] < y:
                    self.found.append(tuple(path) + (y,))
                continue
            if len(path) + 1 < self.max_len:
                path.append(y)
                self._extend(a, path, path_mask | (1 << y))
                path.pop()


def enumerate_holes(
    g: Graph, max_len: int | None = None, budget: int = DEFAULT_HOLE_BUDGET
) -> list[tuple[int, ...]]:
    """All holes of length 4..max_len, canonical, sorted by (length, tuple)."""
    cap = g.n if max_len is None else min(max_len, g.n)
    if cap < 4:
        return []
    holes = _HoleSearch(g, cap, budget).run().found
    return sorted(holes, key=lambda h: (len(h), h))


def _least_induced_c4(g: Graph) -> tuple[int, ...] | None:
    """Fast bitset scan for the lexicographically least induced 4-cycle."""
    best: tuple[int, ...] | None = None
    for u in g.vertices():
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            common = g.mask(u) & g.mask(v)
            for x in _bits(common):
                rest = common & ~g.mask(x) & ~(1 << x)
                for y in _bits(rest):
                    cand = canonical_cycle((u, x, v, y))
                    if best is None or cand < best:
                        best = cand
    return best


def find_even_hole(g: Graph, budget: int = DEFAULT_HOLE_BUDGET) -> tuple[int, ...] | None:
    """Shortest even hole; ties broken by least canonical tuple.

    A four-cycle scan runs first since any induced C4 settles the answer;
    otherwise the full enumeration decides (absence requires it anyway).
    """
    c4 = _least_induced_c4(g)
    if c4 is not None:
        return c4
    best: tuple[int, ...] | None = None
    for h in enumerate_holes(g, budget=budget):
        if len(h) % 2 == 0 and (best is None or (len(h), h) < (len(best), best)):
            best = h
    return best


def is_member(g: Graph, budget: int = DEFAULT_HOLE_BUDGET) -> ClassReport:
    """Run both detectors and report membership with witnesses."""
    claw = find_claw(g)
    even = find_even_hole(g, budget=budget)
    return ClassReport(member=claw is None and even is None, claw=claw, even_hole=even)


def clique_substitution(g: Graph) -> Graph:
    """Replace every vertex by a clique of its degree, one port per edge.

    The i-th smallest neighbor of v connects through the i-th vertex of
    v's clique, so the construction is deterministic.  Requires a
    connected input with minimum degree one; the output is claw-free and
    odd-hole-free whatever the input was.
    """
    if g.n == 0:
        raise DomainError("clique substitution needs a nonempty graph")
    for v in g.vertices():
        if g.degree(v) == 0:
            raise DomainError(f"vertex {v} is isolated; every vertex needs degree >= 1")
    from .graphs import connected_components

    if len(connected_components(g)) != 1:
        raise DomainError("clique substitution requires a connected graph")

    offset = [0] * g.n
    total = 0
    for v in g.vertices():
        offset[v] = total
        total += g.degree(v)
    rank = [
        {u: i for i, u in enumerate(g.neighbors(v))}
        for v in g.vertices()
    ]
    edges: list[tuple[int, int]] = []
    for v in g.vertices():
        base = offset[v]
        d = g.degree(v)
        edges.extend((base + i, base + j) for i in range(d) for j in range(i + 1, d))
    for u, v in g.edges:
        a = offset[u] + rank[u][v]
        b = offset[v] + rank[v][u]
        edges.append((a, b) if a < b else (b, a))
    return Graph(total, edges)
