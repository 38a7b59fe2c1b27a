"""How holes sit inside a level decomposition.

On a class member every hole occupies a contiguous band of levels with a
rigid shape: exactly one vertex in its last level, two in every other
level it meets, and its only same-level edge in its first level.  The
trace of a hole collects the level components its vertices touch above
the first level; traces of two holes are either equal or disjoint, and
a hole whose two same-level vertices ever share a component is a
dominated five-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ClassViolationError, DomainError
from .graphs import mask_of
from .levels import ComponentId, Decomposition
from .recognition import canonical_cycle, enumerate_holes


class TauRelation(Enum):
    DISJOINT = "disjoint"
    EQUAL = "equal"


@dataclass(frozen=True)
class HoleProfile:
    hole: tuple[int, ...]
    first_level: int
    last_level: int
    per_level_counts: dict[int, int]
    first_level_edge: tuple[int, int]
    trace: frozenset[ComponentId]
    dominated_by: int | None

    def to_json(self) -> dict:
        return {
            "hole": list(self.hole),
            "first_level": self.first_level,
            "last_level": self.last_level,
            "per_level_counts": {str(k): v for k, v in sorted(self.per_level_counts.items())},
            "first_level_edge": list(self.first_level_edge),
            "trace": [list(c) for c in sorted(self.trace)],
            "dominated_by": self.dominated_by,
        }


def _validate_hole(d: Decomposition, hole: tuple[int, ...]):
    g = d.graph
    k = len(hole)
    if k < 4 or len(set(hole)) != k:
        raise DomainError(f"{hole} is not an induced cycle")
    for i, v in enumerate(hole):
        if not g.has_edge(v, hole[(i + 1) % k]):
            raise DomainError(f"{hole} is not an induced cycle")
    hmask = mask_of(hole)
    for i, v in enumerate(hole):
        chords = g.mask(v) & hmask & ~(1 << hole[(i + 1) % k]) & ~(1 << hole[(i - 1) % k])
        if chords:
            raise DomainError(f"{hole} is not an induced cycle")
    outside = [v for v in hole if v not in d.g0_vertices]
    if outside:
        raise DomainError(
            f"hole {hole} is not inside G_0: vertices {sorted(outside)} fall outside"
        )


def hole_profile(d: Decomposition, hole: tuple[int, ...]) -> HoleProfile:
    """Profile a hole against the decomposition, asserting the member shape."""
    _validate_hole(d, hole)
    g = d.graph
    hole = canonical_cycle(tuple(hole))
    lv = {v: d.level_of[v] for v in hole}
    first, last = min(lv.values()), max(lv.values())
    counts: dict[int, int] = {}
    for v in hole:
        counts[lv[v]] = counts.get(lv[v], 0) + 1
    expected = {i: (1 if i == last else 2) for i in range(first, last + 1)}
    if counts != expected:
        raise ClassViolationError(
            f"hole {hole} has level counts {counts}, expected {expected}"
        )
    k = len(hole)
    level_edges = [
        (min(a, b), max(a, b))
        for a, b in ((hole[i], hole[(i + 1) % k]) for i in range(k))
        if lv[a] == lv[b]
    ]
    if len(level_edges) != 1 or lv[level_edges[0][0]] != first:
        raise ClassViolationError(
            f"hole {hole} must have exactly one same-level edge, in its first level;"
            f" found {level_edges}"
        )
    trace = frozenset(
        d.component_of[v] for v in hole if first + 1 <= lv[v] <= last
    )
    hmask = mask_of(hole)
    dominated_by = None
    for v in g.vertices():
        if not (hmask >> v) & 1 and g.mask(v) & hmask == hmask:
            dominated_by = v
            break
    return HoleProfile(
        hole=hole,
        first_level=first,
        last_level=last,
        per_level_counts=counts,
        first_level_edge=level_edges[0],
        trace=trace,
        dominated_by=dominated_by,
    )


def tau_relation(d: Decomposition, h1: tuple[int, ...], h2: tuple[int, ...]) -> TauRelation:
    """Traces of two holes are disjoint or equal; anything else is a breach.

    Equal traces additionally share the component of their first-level
    vertices, which is asserted here.
    """
    p1, p2 = hole_profile(d, h1), hole_profile(d, h2)
    if not p1.trace & p2.trace:
        return TauRelation.DISJOINT
    if p1.trace != p2.trace:
        raise ClassViolationError(
            f"traces of {p1.hole} and {p2.hole} overlap without being equal"
        )
    c1 = d.component_of[p1.first_level_edge[0]]
    c2 = d.component_of[p2.first_level_edge[0]]
    if c1 != c2:
        raise ClassViolationError(
            f"holes {p1.hole} and {p2.hole} have equal traces but different"
            f" first-level components {c1} and {c2}"
        )
    return TauRelation.EQUAL


def dominated_c5_check(d: Decomposition, hole: tuple[int, ...]) -> int | None:
    """If some inner level keeps both its hole vertices in one component,
    the hole must be a dominated five-cycle; returns the dominating king.

    Returns None when no inner level does that.
    """
    p = hole_profile(d, hole)
    lv = {v: d.level_of[v] for v in p.hole}
    for level in range(p.first_level + 1, p.last_level):
        here = [v for v in p.hole if lv[v] == level]
        comps = {d.component_of[v] for v in here}
        if len(comps) == 1:
            if len(p.hole) != 5:
                raise ClassViolationError(
                    f"hole {p.hole} spans one component at inner level {level}"
                    f" but has length {len(p.hole)}, expected 5"
                )
            comp = d.by_id[comps.pop()]
            hmask = mask_of(p.hole)
            for king in comp.kings:
                if d.graph.mask(king) & hmask == hmask:
                    return king
            raise ClassViolationError(
                f"no king of component {comp.id} dominates five-cycle {p.hole}"
            )
    return None


def holes_in_arena(d: Decomposition, budget: int | None = None) -> list[tuple[int, ...]]:
    """All holes of the graph that lie entirely inside G_0."""
    kwargs = {} if budget is None else {"budget": budget}
    return [
        h for h in enumerate_holes(d.graph, **kwargs)
        if all(v in d.g0_vertices for v in h)
    ]
