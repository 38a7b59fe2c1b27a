"""Immutable simple graphs with bitset adjacency.

Vertices are dense 0-based integers.  Adjacency is kept per vertex as a
Python int used as a bitmask, which makes the clique / common-neighbor
tests that dominate this package cheap.  The vertex count is capped at
MAX_VERTICES; inputs referencing vertices outside [0, n) are rejected,
never renumbered, so witnesses always refer to the input's own labels.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import DomainError, ParseError

MAX_VERTICES = 512


def _bits(mask: int):
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph, immutable after construction."""

    __slots__ = ("n", "edges", "_masks", "_neighbors")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0 or n > MAX_VERTICES:
            raise DomainError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        masks = [0] * n
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DomainError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self._masks = tuple(masks)
        self._neighbors = tuple(tuple(_bits(m)) for m in masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def mask(self, v: int) -> int:
        return self._masks[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self._masks[u] >> v) & 1 == 1

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def parse_graph(text: str) -> Graph:
    """Parse the canonical edge-list format.

    First significant line is ``n m``; exactly m lines ``u v`` with
    u < v follow.  Lines starting with ``#`` are comments and blank
    lines are ignored.  All violations raise ParseError naming the
    offending 1-based line number.
    """
    header: tuple[int, int] | None = None
    n = m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or n > MAX_VERTICES:
                raise ParseError(
                    f"line {lineno}: vertex count {n} outside [0, {MAX_VERTICES}]"
                )
            if m < 0:
                raise ParseError(f"line {lineno}: negative edge count {m}")
            header = (n, m)
            continue
        if len(edges) == m:
            raise ParseError(f"line {lineno}: expected {m} edges, found extra data")
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: malformed edge line {line!r}") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if u > v:
            raise ParseError(f"line {lineno}: expected u < v, got {u} {v}")
        for w in (u, v):
            if not 0 <= w < n:
                raise ParseError(f"line {lineno}: vertex {w} out of range")
        if (u, v) in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise ParseError("line 1: missing header")
    if len(edges) != m:
        raise ParseError(f"unexpected end of input: expected {m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical text form: header then edges sorted, newline-terminated."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff the given vertices are pairwise adjacent (size <= 1 counts)."""
    vs = list(vertices)
    smask = mask_of(vs)
    for v in vs:
        if g.mask(v) & smask != smask & ~(1 << v):
            return False
    return True


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their minimum element."""
    unseen = (1 << g.n) - 1
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.mask(v)
            frontier = reach & ~comp
            comp |= frontier
        comps.append(list(_bits(comp)))
        unseen &= ~comp
    return comps


def bfs_distances(g: Graph, source: int, allowed: Iterable[int] | None = None) -> dict[int, int]:
    """BFS distances from source inside the subgraph induced by allowed.

    Unreachable vertices are absent from the result.  allowed=None means
    the whole vertex set; source must belong to allowed.
    """
    if allowed is None:
        amask = (1 << g.n) - 1
    else:
        amask = mask_of(allowed)
    if not (0 <= source < g.n) or not (amask >> source) & 1:
        raise DomainError(f"source {source} not in the allowed vertex set")
    dist = {source: 0}
    seen = 1 << source
    queue = deque([source])
    while queue:
        v = queue.popleft()
        fresh = g.mask(v) & amask & ~seen
        seen |= fresh
        for w in _bits(fresh):
            dist[w] = dist[v] + 1
            queue.append(w)
    return dist


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Relabeled induced subgraph plus the list mapping new index -> old label."""
    old = sorted(vertices)
    index = {v: i for i, v in enumerate(old)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph(len(old), edges), old
