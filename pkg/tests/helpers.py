"""Independent reference implementations the test suite checks against.

Everything here is deliberately naive: readable brute force with no
shared code or data structures with the package internals, so agreement
is evidence rather than tautology.
"""

from __future__ import annotations

import random
from itertools import combinations

from copchase.graphs import Graph


def naive_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """First (center, a, b, c) in lex order with a, b, c pairwise nonadjacent."""
    for center in range(g.n):
        nbrs = sorted(g.neighbors(center))
        for a, b, c in combinations(nbrs, 3):
            if not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c):
                return (center, a, b, c)
    return None


def is_induced_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    """Distinct vertices, consecutive adjacent, no chords."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(cycle[i], cycle[j])
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


def _subset_is_cycle(g: Graph, vertices: tuple[int, ...]) -> bool:
    degs = []
    for v in vertices:
        d = sum(1 for w in vertices if w != v and g.has_edge(v, w))
        degs.append(d)
    if any(d != 2 for d in degs):
        return False
    # connected 2-regular subset = single cycle
    seen = {vertices[0]}
    frontier = [vertices[0]]
    inside = set(vertices)
    while frontier:
        v = frontier.pop()
        for w in g.neighbors(v):
            if w in inside and w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(vertices)


def naive_holes(g: Graph, min_len: int = 4) -> set[frozenset[int]]:
    """Vertex sets of all induced cycles of length >= min_len, by subset scan."""
    out = set()
    for size in range(min_len, g.n + 1):
        for sub in combinations(range(g.n), size):
            if _subset_is_cycle(g, sub):
                out.add(frozenset(sub))
    return out


def naive_even_hole_exists(g: Graph) -> bool:
    return any(len(s) % 2 == 0 for s in naive_holes(g))


def dismantlable(g: Graph) -> bool:
    """Reduce by deleting dominated vertices; succeeds iff one cop wins."""
    alive = set(range(g.n))
    changed = True
    while len(alive) > 1 and changed:
        changed = False
        for v in sorted(alive):
            closed_v = ({v} | set(g.neighbors(v))) & alive
            for u in sorted(alive - {v}):
                closed_u = ({u} | set(g.neighbors(u))) & alive
                if closed_v <= closed_u:
                    alive.remove(v)
                    changed = True
                    break
            if changed:
                break
    return len(alive) == 1


def brute_force_values(g: Graph, k: int):
    """Dict-based minimax over (cops multiset, robber, side) states.

    side 0 = cops to move.  Values are remaining cop turns; None is
    escape.  Iterates Bellman relaxation until fixpoint, so it is an
    independent check on the vectorized solver for small inputs.
    """
    from itertools import combinations_with_replacement, product

    closed = {v: sorted({v, *g.neighbors(v)}) for v in range(g.n)}
    multisets = list(combinations_with_replacement(range(g.n), k))
    INF = float("inf")
    vc = {(c, r): (0 if r in c else INF) for c in multisets for r in range(g.n)}
    vr = dict(vc)
    changed = True
    while changed:
        changed = False
        for c in multisets:
            for r in range(g.n):
                if r in c:
                    continue
                best = INF
                for moves in product(*(closed[ci] for ci in c)):
                    best = min(best, vr[tuple(sorted(moves)), r])
                val = best if best is INF else best + 1
                if val != vc[c, r]:
                    vc[c, r] = val
                    changed = True
        for c in multisets:
            for r in range(g.n):
                if r in c:
                    continue
                val = max(vc[c, v] for v in closed[r])
                if val != vr[c, r]:
                    vr[c, r] = val
                    changed = True
    return vc, vr, multisets


def brute_force_capture_time(g: Graph, k: int) -> int | None:
    """min over cop placements of max over robber placements of vc."""
    vc, _, multisets = brute_force_values(g, k)
    best = float("inf")
    for c in multisets:
        worst = max(vc[c, r] for r in range(g.n))
        best = min(best, worst)
    return None if best == float("inf") else int(best)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < p])


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Rejection-sample a connected draw; falls back to adding a path."""
    from copchase.graphs import connected_components

    rng = random.Random(seed)
    for _ in range(200):
        g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                      if rng.random() < p])
        if len(connected_components(g)) == 1:
            return g
    edges = set(g.edges)
    edges.update((i, i + 1) for i in range(n - 1))
    return Graph(n, sorted(edges))


def random_dismantlable(n: int, seed: int) -> Graph:
    """Grow a graph one dominated vertex at a time; cop-win by construction."""
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    nbrs: dict[int, set[int]] = {0: set()}
    for v in range(1, n):
        parent = rng.randrange(v)
        attach = {parent}
        extra = [u for u in nbrs[parent] if u != v]
        rng.shuffle(extra)
        attach.update(extra[: rng.randint(0, len(extra))])
        nbrs[v] = set()
        for u in attach:
            edges.append((u, v))
            nbrs[u].add(v)
            nbrs[v].add(u)
    return Graph(n, edges)


def random_tree_graph(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(n, edges)
