"""Graph families and random generation of class members.

Every builder is deterministic.  Families known to lie inside the class
are re-verified by the recognition gate on each construction, so a
corpus assembled from these specs needs no further vetting.  The
standard corpus is described by a checked-in manifest of family specs
and sampling seeds; loading it replays the exact generation chain,
which makes corpora bit-reproducible across machines.
"""

from __future__ import annotations

import heapq
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .errors import DomainError
from .graphs import MAX_VERTICES, Graph, connected_components
from .recognition import is_member

__all__ = [
    "FAMILY_NAMES",
    "FamilySpec",
    "family",
    "gen_random_member",
    "make_family",
    "corpus_manifest",
    "standard_corpus",
]

DEFAULT_MAX_TRIES = 20_000

# f6 and petersen are deliberate negative fixtures; random trees leave
# the class as soon as a vertex with three pairwise nonadjacent
# neighbors appears, which is every non-path tree.
_UNCHECKED = frozenset({"f6", "petersen", "random_tree"})


def _cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def _odd_cycle(length: int) -> Graph:
    if length < 3 or length % 2 == 0:
        raise DomainError(f"odd_cycle needs an odd length >= 3, got {length}")
    return Graph(length, _cycle_edges(length))


def _clique(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"clique needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _path(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a seeded Prufer draw."""
    if n < 1:
        raise DomainError(f"random_tree needs n >= 1, got {n}")
    if n <= 2:
        return _path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def _wheel5() -> Graph:
    # C5 rim 0..4 with dominating hub 5
    return Graph(6, _cycle_edges(5) + [(i, 5) for i in range(5)])


def _c5hat7() -> Graph:
    # pendant 0, attachment 1, a C5 hanging from the edge (2, 3)
    return Graph(7, [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 6), (5, 6)])


def _twoclique7() -> Graph:
    # top level {4, 5, 6} splits as A={4}, B={5}, K={6} with 4-5 missing
    return Graph(
        7,
        [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (2, 6), (3, 5), (3, 6), (4, 6), (5, 6)],
    )


def _f6() -> Graph:
    # smallest fixture with a claw at vertex 1; stays even-hole-free
    return Graph(6, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5)])


def _petersen() -> Graph:
    outer = _cycle_edges(5)
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def _c5_gluing(hats: int) -> Graph:
    """Several C5 hats welded along one shared top clique.

    Each hat contributes five vertices a, b, c, d, e with the cycle
    a-c-e-d-b-a; every a and b attaches to vertex 1 and all top vertices
    (the a's and b's) are made pairwise adjacent, hence one clique
    component right above the attachment vertex.  hats=1 reproduces the
    plain C5 hat on seven vertices.
    """
    if hats < 1:
        raise DomainError(f"c5_gluing needs hats >= 1, got {hats}")
    edges = {(0, 1)}
    tops: list[int] = []
    v = 2
    for _ in range(hats):
        a, b, c, d, e = range(v, v + 5)
        v += 5
        edges.update([(1, a), (1, b), (a, c), (b, d), (c, e), (d, e)])
        tops.extend((a, b))
    for i in range(len(tops)):
        for j in range(i + 1, len(tops)):
            edges.add((tops[i], tops[j]))
    return Graph(v, sorted(edges))


def _hung_wheel5() -> Graph:
    # W5 (rim 2,3,4,5,6 with hub 7) reached through the pendant path
    # 0-1 and the rim edge (2, 3); the rim becomes a dominated C5 two
    # levels above the start vertex.
    return Graph(
        8,
        [
            (0, 1), (1, 2), (1, 3),
            (2, 3), (3, 4), (4, 5), (5, 6), (2, 6),
            (2, 7), (3, 7), (4, 7), (5, 7), (6, 7),
        ],
    )


# name -> (builder, parameter names, draws from seed)
_BUILDERS: dict[str, tuple] = {
    "odd_cycle": (_odd_cycle, ("length",), False),
    "clique": (_clique, ("n",), False),
    "path": (_path, ("n",), False),
    "random_tree": (_random_tree, ("n",), True),
    "wheel5": (_wheel5, (), False),
    "c5hat7": (_c5hat7, (), False),
    "twoclique7": (_twoclique7, (), False),
    "f6": (_f6, (), False),
    "petersen": (_petersen, (), False),
    "c5_gluing": (_c5_gluing, ("hats",), False),
    "hung_wheel5": (_hung_wheel5, (), False),
}

FAMILY_NAMES = tuple(sorted(_BUILDERS))


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus the integers that pin down one graph."""

    name: str
    params: tuple[int, ...] = ()
    seed: int | None = None

    def label(self) -> str:
        parts = [self.name, *map(str, self.params)]
        if self.seed is not None:
            parts.append(f"s{self.seed}")
        return "_".join(parts)

    def to_json(self) -> dict:
        return {"name": self.name, "params": list(self.params), "seed": self.seed}

    @classmethod
    def from_json(cls, data: dict) -> "FamilySpec":
        return cls(
            name=data["name"],
            params=tuple(data.get("params") or ()),
            seed=data.get("seed"),
        )


def make_family(spec: FamilySpec) -> Graph:
    """Build the graph a spec describes, gating members on construction."""
    if spec.name not in _BUILDERS:
        raise DomainError(
            f"unknown family {spec.name!r}; choose from {', '.join(FAMILY_NAMES)}"
        )
    builder, param_names, needs_seed = _BUILDERS[spec.name]
    if len(spec.params) != len(param_names):
        raise DomainError(
            f"family {spec.name} takes parameters ({', '.join(param_names)}); "
            f"got {len(spec.params)} value(s)"
        )
    args = list(spec.params)
    if needs_seed:
        args.append(spec.seed if spec.seed is not None else 0)
    g = builder(*args)
    if spec.name not in _UNCHECKED:
        report = is_member(g)
        if not report.member:
            raise RuntimeError(
                f"family {spec.label()} produced a graph outside the class: "
                f"claw={report.claw}, even_hole={report.even_hole}"
            )
    return g


def family(name: str, *params: int, seed: int | None = None) -> Graph:
    return make_family(FamilySpec(name, tuple(params), seed))


def gen_random_member(
    n: int,
    p: Fraction | float | str,
    seed: int,
    max_tries: int = DEFAULT_MAX_TRIES,
) -> Graph | None:
    """Rejection-sample one connected class member, or None if unlucky.

    Draws edge sets with independent probability p in a fixed pair
    order, so the result depends only on (n, p, seed, max_tries).  p is
    held as an exact rational; comparing the float draw against it never
    rounds, which keeps replays bit-identical across platforms.
    """
    if not 3 <= n <= MAX_VERTICES:
        raise DomainError(f"vertex count {n} outside [3, {MAX_VERTICES}]")
    p = Fraction(p)
    if not 0 < p < 1:
        raise DomainError(f"edge probability {p} outside (0, 1)")
    if max_tries < 1:
        raise DomainError(f"max_tries must be positive, got {max_tries}")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(max_tries):
        edges = [e for e in pairs if rng.random() < p]
        g = Graph(n, edges)
        if len(connected_components(g)) != 1:
            continue
        if is_member(g).member:
            return g
    return None


def corpus_manifest() -> list[dict]:
    """Raw manifest entries shipped with the package."""
    text = resources.files("copchase").joinpath("data/corpus_manifest.json").read_text()
    return json.loads(text)["entries"]


@lru_cache(maxsize=1)
def _corpus() -> tuple[tuple[str, Graph], ...]:
    out = []
    for entry in corpus_manifest():
        if "family" in entry:
            g = make_family(FamilySpec.from_json(entry["family"]))
        else:
            r = entry["random"]
            g = gen_random_member(
                r["n"], Fraction(r["p"][0], r["p"][1]), r["seed"], r["max_tries"]
            )
            if g is None:
                raise RuntimeError(f"manifest entry {entry['label']} did not reproduce")
        out.append((entry["label"], g))
    return tuple(out)


def standard_corpus() -> list[tuple[str, Graph]]:
    """The checked-in verification corpus as (label, graph) pairs."""
    return list(_corpus())
