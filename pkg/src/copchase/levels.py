"""Level decomposition of a graph around a pinned edge u0u1.

Removing B0 = N(u0) minus u1 and keeping u0's component yields the arena
G_0; its vertices are layered by distance from u0, so level 0 is {u0}
and level 1 is {u1}.  Inside a level, each connected component is
required to be a clique or a 2-clique (two cliques A and B glued on a
common clique K, with no edges between A and B).  Components are
classified eagerly; on graphs outside the class a failed classification
raises ClassViolationError, which doubles as the violation report the
validators in this module look for.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Iterator

from .errors import BudgetExceededError, ClassViolationError, DomainError
from .graphs import Graph, _bits, bfs_distances, mask_of

DEFAULT_PATH_BUDGET = 10_000_000

ComponentId = tuple[int, int]  # (level, least vertex)


@dataclass(frozen=True)
class LevelComponent:
    """One connected component of a single level."""

    level: int
    vertices: tuple[int, ...]
    kind: str  # "clique" | "two_clique"
    part_a: tuple[int, ...] | None
    part_b: tuple[int, ...] | None
    part_k: tuple[int, ...] | None
    kings: tuple[int, ...]
    mate_id: ComponentId | None = None

    @property
    def id(self) -> ComponentId:
        return (self.level, self.vertices[0])

    @property
    def singular(self) -> bool:
        return self.mate_id is None


@dataclass(frozen=True)
class ForbiddenPathWitness:
    """An odd path refuting membership, anchored at its base level.

    The path starts and ends in the base level, its second and
    second-to-last vertices sit one level higher, every other vertex
    stays at or above the base level, and it is induced except possibly
    for the closing edge between its endpoints (which then makes it a
    hole).
    """

    path: tuple[int, ...]
    base_level: int


@dataclass
class Decomposition:
    graph: Graph
    u0: int
    u1: int
    box: tuple[int, ...]
    g0_vertices: frozenset[int]
    levels: list[tuple[int, ...]]
    components: list[LevelComponent]
    level_of: dict[int, int]
    component_of: dict[int, ComponentId]
    by_id: dict[ComponentId, LevelComponent]

    def component_at(self, v: int) -> LevelComponent:
        return self.by_id[self.component_of[v]]

    def components_at_level(self, level: int) -> list[LevelComponent]:
        return [c for c in self.components if c.level == level]


def _level_components(g: Graph, level_vertices: tuple[int, ...]) -> list[list[int]]:
    lmask = mask_of(level_vertices)
    comps = []
    unseen = lmask
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.mask(v) & lmask
            frontier = reach & ~comp
            comp |= frontier
        comps.append(list(_bits(comp)))
        unseen &= ~comp
    return comps


def _classify(g: Graph, level: int, vertices: list[int]) -> LevelComponent:
    vs = sorted(vertices)
    cmask = mask_of(vs)
    kings = [v for v in vs if g.mask(v) & cmask == cmask & ~(1 << v)]
    if len(kings) == len(vs):
        return LevelComponent(
            level=level,
            vertices=tuple(vs),
            kind="clique",
            part_a=None,
            part_b=None,
            part_k=None,
            kings=tuple(vs),
        )
    if not kings:
        raise ClassViolationError(
            f"level {level} component {vs} has no vertex adjacent to all others"
        )
    nonkings = [v for v in vs if v not in set(kings)]
    # In a 2-clique the complement restricted to non-kings is the complete
    # bipartite graph between A and B, so a 2-coloring of that complement
    # recovers the split.
    nk_mask = mask_of(nonkings)
    color: dict[int, int] = {nonkings[0]: 0}
    queue = deque([nonkings[0]])
    while queue:
        v = queue.popleft()
        others = nk_mask & ~(1 << v) & ~g.mask(v)
        for w in _bits(others):
            if w in color:
                if color[w] == color[v]:
                    raise ClassViolationError(
                        f"level {level} component {vs} is neither a clique nor a 2-clique"
                    )
            else:
                color[w] = 1 - color[v]
                queue.append(w)
    if len(color) != len(nonkings):
        raise ClassViolationError(
            f"level {level} component {vs} is neither a clique nor a 2-clique"
        )
    part_a = sorted(v for v in nonkings if color[v] == color[nonkings[0]])
    part_b = sorted(v for v in nonkings if color[v] != color[nonkings[0]])
    if not part_b:
        raise ClassViolationError(
            f"level {level} component {vs} is neither a clique nor a 2-clique"
        )
    amask, bmask = mask_of(part_a), mask_of(part_b)
    for v in part_a:
        if g.mask(v) & bmask:
            raise ClassViolationError(
                f"level {level} component {vs}: sides are not fully non-adjacent"
            )
        if g.mask(v) & amask != amask & ~(1 << v):
            raise ClassViolationError(
                f"level {level} component {vs}: side A is not a clique"
            )
    for v in part_b:
        if g.mask(v) & bmask != bmask & ~(1 << v):
            raise ClassViolationError(
                f"level {level} component {vs}: side B is not a clique"
            )
    return LevelComponent(
        level=level,
        vertices=tuple(vs),
        kind="two_clique",
        part_a=tuple(part_a),
        part_b=tuple(part_b),
        part_k=tuple(sorted(kings)),
        kings=tuple(sorted(kings)),
    )


def _mate_search(d: Decomposition, comp: LevelComponent) -> ComponentId | None:
    """Find the component's mate: the unique other component of its level
    reachable through vertices at or above that level."""
    g = d.graph
    region = mask_of(
        v for v, lv in d.level_of.items() if lv >= comp.level
    )
    seen = mask_of(comp.vertices)
    frontier = seen
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= g.mask(v) & region
        frontier = reach & ~seen
        seen |= frontier
    mates = set()
    for other in d.components_at_level(comp.level):
        if other.id != comp.id and mask_of(other.vertices) & seen:
            mates.add(other.id)
    if not mates:
        return None
    if len(mates) > 1:
        raise ClassViolationError(
            f"component {comp.id} has more than one mate: {sorted(mates)}"
        )
    return mates.pop()


def decompose(g: Graph, u0: int, u1: int) -> Decomposition:
    """Build the full decomposition around the edge u0u1.

    Components of every level are classified and their mates resolved up
    front; any breach of the class structure raises ClassViolationError.
    """
    if not (0 <= u0 < g.n and 0 <= u1 < g.n) or not g.has_edge(u0, u1):
        raise DomainError(f"u0u1 = ({u0}, {u1}) is not an edge")
    box = tuple(v for v in g.neighbors(u0) if v != u1)
    remaining = [v for v in g.vertices() if v not in set(box)]
    dist = bfs_distances(g, u0, remaining)
    g0 = frozenset(dist)
    max_level = max(dist.values())
    levels = [
        tuple(sorted(v for v, dv in dist.items() if dv == i))
        for i in range(max_level + 1)
    ]
    level_of = dict(dist)
    components: list[LevelComponent] = []
    component_of: dict[int, ComponentId] = {}
    for i in range(1, max_level + 1):
        for comp_vs in _level_components(g, levels[i]):
            comp = _classify(g, i, comp_vs)
            components.append(comp)
            for v in comp_vs:
                component_of[v] = comp.id
    d = Decomposition(
        graph=g,
        u0=u0,
        u1=u1,
        box=box,
        g0_vertices=g0,
        levels=levels,
        components=components,
        level_of=level_of,
        component_of=component_of,
        by_id={c.id: c for c in components},
    )
    with_mates = [replace(c, mate_id=_mate_search(d, c)) for c in components]
    d.components = sorted(with_mates, key=lambda c: c.id)
    d.by_id = {c.id: c for c in d.components}
    return d


def classify_component(d: Decomposition, comp_vertices: list[int]) -> LevelComponent:
    """Classify an explicit vertex set, checking it really is a level component."""
    vs = sorted(comp_vertices)
    if not vs:
        raise DomainError("empty component")
    levels = {d.level_of.get(v) for v in vs}
    if len(levels) != 1 or None in levels:
        raise DomainError(f"vertices {vs} do not sit in a single level of G_0")
    level = levels.pop()
    if vs not in [sorted(c) for c in _level_components(d.graph, d.levels[level])]:
        raise DomainError(f"vertices {vs} are not a connected component of level {level}")
    return d.by_id[(level, vs[0])]


@dataclass(frozen=True)
class BackwardProfile:
    """How the previous level attaches to a component.

    For a 2-clique, every attaching vertex sees exactly one full side
    (A plus K, or B plus K); ``sides`` records which.  For a clique the
    attaching vertices order into a chain of nested neighborhoods ending
    in the whole component; ``chain`` lists them in that order.
    """

    kind: str
    sides: dict[int, str] | None
    chain: tuple[int, ...] | None


def backward_profile(d: Decomposition, comp: LevelComponent) -> BackwardProfile:
    g = d.graph
    cmask = mask_of(comp.vertices)
    below = d.levels[comp.level - 1]
    attach = [u for u in below if g.mask(u) & cmask]
    if comp.kind == "two_clique":
        side_a = mask_of(comp.part_a) | mask_of(comp.part_k)
        side_b = mask_of(comp.part_b) | mask_of(comp.part_k)
        sides: dict[int, str] = {}
        for u in attach:
            up = g.mask(u) & mask_of(d.levels[comp.level])
            if up == side_a:
                sides[u] = "A"
            elif up == side_b:
                sides[u] = "B"
            else:
                raise ClassViolationError(
                    f"vertex {u} below 2-clique {comp.id} sees neither side exactly"
                )
        return BackwardProfile(kind="two_clique", sides=sides, chain=None)
    ups = {}
    lvl_mask = mask_of(d.levels[comp.level])
    for u in attach:
        up = g.mask(u) & lvl_mask
        if up & ~cmask:
            raise ClassViolationError(
                f"vertex {u} below clique {comp.id} has neighbors outside it"
            )
        ups[u] = up
    chain = sorted(attach, key=lambda u: (bin(ups[u]).count("1"), u))
    for prev, nxt in zip(chain, chain[1:]):
        if ups[prev] & ~ups[nxt]:
            raise ClassViolationError(
                f"upward neighborhoods of {prev} and {nxt} below {comp.id} do not nest"
            )
    if chain and ups[chain[-1]] != cmask:
        raise ClassViolationError(
            f"no vertex below clique {comp.id} sees all of it"
        )
    return BackwardProfile(kind="clique", sides=None, chain=tuple(chain))


def mate(d: Decomposition, comp: LevelComponent) -> ComponentId | None:
    """Recompute the component's mate by search (None when singular)."""
    return _mate_search(d, comp)


def find_forbidden_path(
    d: Decomposition, budget: int = DEFAULT_PATH_BUDGET
) -> ForbiddenPathWitness | None:
    """Exhaustive search for a forbidden path; None on class members.

    Scans base levels in increasing order and start vertices in
    increasing order, so the witness is deterministic.
    """
    g = d.graph
    counter = [0]

    def charge():
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceededError(
                f"forbidden-path search budget of {budget} nodes exceeded"
            )

    max_level = len(d.levels) - 1
    for base in range(1, max_level):
        base_set = set(d.levels[base])
        next_set = set(d.levels[base + 1])
        region = mask_of(
            v for v, lv in d.level_of.items() if lv >= base
        )
        for x1 in d.levels[base]:
            hit = _forbidden_dfs(
                g, d, x1, base, base_set, next_set, region, charge
            )
            if hit is not None:
                return ForbiddenPathWitness(path=hit, base_level=base)
    return None


def _forbidden_dfs(g, d, x1, base, base_set, next_set, region, charge):
    stack_path = [x1]
    path_mask = 1 << x1

    def extend(last: int) -> tuple[int, ...] | None:
        nonlocal path_mask
        charge()
        internal = path_mask & ~(1 << x1) & ~(1 << last)
        for y in _bits(g.mask(last) & region & ~path_mask):
            if g.mask(y) & internal:
                continue
            first_step = len(stack_path) == 1
            if first_step and y not in next_set:
                continue
            closes = g.has_edge(y, x1)
            if (
                not first_step
                and y in base_set
                and last in next_set
                and (len(stack_path) + 1) % 2 == 0
            ):
                # Endpoint reached: induced when y avoids x1, a hole otherwise.
                return tuple(stack_path) + (y,)
            if closes and not first_step:
                continue  # only usable as an endpoint, and it did not qualify
            stack_path.append(y)
            path_mask |= 1 << y
            hit = extend(y)
            if hit is not None:
                return hit
            stack_path.pop()
            path_mask &= ~(1 << y)
        return None

    return extend(x1)


def iter_monotone_paths(d: Decomposition, start: int) -> Iterator[tuple[int, ...]]:
    """All paths from start down to u1 using one vertex per level.

    Such a path moves between adjacent levels at every step, so it is
    exactly the "simple path" the pursuit argument quantifies over.
    """
    g = d.graph
    lv = d.level_of.get(start)
    if lv is None:
        raise DomainError(f"vertex {start} is not in G_0")

    def walk(v: int, level: int, acc: list[int]):
        if level == 1:
            yield tuple(acc)
            return
        below = mask_of(d.levels[level - 1])
        for w in _bits(g.mask(v) & below):
            acc.append(w)
            yield from walk(w, level - 1, acc)
            acc.pop()

    if lv == 0:
        return
    yield from walk(start, lv, [start])


def decomposition_to_json(d: Decomposition) -> dict:
    comps = []
    for c in d.components:
        comps.append(
            {
                "level": c.level,
                "vertices": list(c.vertices),
                "kind": c.kind,
                "A": list(c.part_a) if c.part_a is not None else None,
                "B": list(c.part_b) if c.part_b is not None else None,
                "K": list(c.part_k) if c.part_k is not None else None,
                "kings": list(c.kings),
                "mate": list(c.mate_id) if c.mate_id is not None else None,
            }
        )
    return {
        "u0": d.u0,
        "u1": d.u1,
        "box": list(d.box),
        "levels": [list(l) for l in d.levels],
        "components": comps,
    }
