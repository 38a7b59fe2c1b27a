"""Exact pursuit values by backward induction over the full game space.

A position is (cop multiset, robber vertex, side to move).  Cops are
interchangeable, so multisets shrink the space k!-fold.  Values count
remaining cop turns until capture under optimal play: capture positions
hold 0, the cop side minimizes 1 + (best robber reply), the robber side
maximizes over stay-or-step.  Iteration starts from the infinite
sentinel and sweeps downward; it provably settles on the least fixed
point, i.e. the true game values.

Values are 16-bit saturating counters; 0xFFFF is the infinity sentinel.
"""

from __future__ import annotations

import json
from itertools import combinations_with_replacement, product
from math import comb

import numpy as np

from .errors import BudgetExceededError, DomainError
from .graphs import Graph, connected_components, induced_subgraph

INFINITY = np.uint16(0xFFFF)
DEFAULT_STATE_BUDGET = 50_000_000
MAX_COPS = 4

# keep each gathered value block around a million rows
_CHUNK_ROWS = 1 << 20


def _closed_neighborhoods(g: Graph) -> list[np.ndarray]:
    return [
        np.array(sorted({v, *g.neighbors(v)}), dtype=np.int64)
        for v in g.vertices()
    ]


def _multiset_table(n: int, k: int):
    """All sorted k-multisets of [0,n) in lex order, plus a dense decoder.

    The decoder maps the base-n code of a sorted tuple to its index.
    """
    multisets = list(combinations_with_replacement(range(n), k))
    base = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    codes = np.array(multisets, dtype=np.int64) @ base
    lookup = np.full(n**k, -1, dtype=np.int64)
    lookup[codes] = np.arange(len(multisets), dtype=np.int64)
    return multisets, base, lookup


def _cop_successors(closed, multisets, base, lookup, k):
    """Ragged successor table: joint cop moves as multiset indices."""
    flat: list[np.ndarray] = []
    starts = np.zeros(len(multisets) + 1, dtype=np.int64)
    for i, cops in enumerate(multisets):
        grids = np.meshgrid(*(closed[c] for c in cops), indexing="ij")
        tuples = np.stack([a.reshape(-1) for a in grids], axis=1)
        tuples.sort(axis=1)
        codes = np.unique(tuples @ base)
        flat.append(lookup[codes])
        starts[i + 1] = starts[i] + codes.size
    return np.concatenate(flat) if flat else np.empty(0, np.int64), starts


class SolveResult:
    """Frozen outcome of one retrograde solve.

    Exposes the value tables through small query helpers; the arrays
    themselves stay private so callers cannot desync them from the
    multiset indexing.
    """

    def __init__(self, graph, k, multisets, index, vc, vr):
        self.graph = graph
        self.k = k
        self._multisets = multisets
        self._index = index
        self._vc = vc
        self._vr = vr
        best = vc.max(axis=1)
        pick = int(np.argmin(best))
        self._best_value = int(best[pick])
        self.cop_win = self._best_value < int(INFINITY)
        self.capture_time = self._best_value if self.cop_win else None
        self.initial_cops = multisets[pick] if self.cop_win else None

    def _mindex(self, cops) -> int:
        key = tuple(sorted(cops))
        if len(key) != self.k:
            raise DomainError(f"expected {self.k} cop positions, got {len(key)}")
        try:
            return self._index[key]
        except KeyError:
            raise DomainError(f"invalid cop positions {key}") from None

    @staticmethod
    def _lift(raw: int) -> int | None:
        return None if raw == int(INFINITY) else int(raw)

    def value(self, cops, robber: int, robber_to_move: bool = False) -> int | None:
        """Remaining cop turns until capture, or None if the robber escapes."""
        table = self._vr if robber_to_move else self._vc
        return self._lift(int(table[self._mindex(cops), robber]))

    def survival_map(self, cops, options) -> dict[int, int | None]:
        m = self._mindex(cops)
        return {int(v): self._lift(int(self._vc[m, v])) for v in options}

    def robber_best_move(self, cops, robber: int) -> int:
        """Stay-or-step choice maximizing survival; ties to the least vertex."""
        options = sorted({robber, *self.graph.neighbors(robber)})
        m = self._mindex(cops)
        return max(options, key=lambda v: (int(self._vc[m, v]), -v))

    def robber_best_placement(self, cops) -> int:
        m = self._mindex(cops)
        return max(self.graph.vertices(), key=lambda v: (int(self._vc[m, v]), -v))

    def cop_best_moves(self, cops, robber: int) -> tuple[int, ...]:
        """Joint cop move minimizing the robber's best reply.

        Ties break to the lexicographically least sorted position tuple.
        """
        current = tuple(sorted(cops))
        self._mindex(current)
        g = self.graph
        options = [sorted({c, *g.neighbors(c)}) for c in current]
        best, best_val = None, None
        for move in product(*options):
            key = tuple(sorted(move))
            val = int(self._vr[self._index[key], robber])
            if best_val is None or val < best_val or (val == best_val and key < best):
                best, best_val = key, val
        return best

    def policy_json(self) -> dict:
        def rows(table):
            return [[self._lift(int(x)) for x in row] for row in table]

        return {
            "n": self.graph.n,
            "k": self.k,
            "cop_win": self.cop_win,
            "capture_time": self.capture_time,
            "initial_cops": list(self.initial_cops) if self.initial_cops else None,
            "multisets": [list(m) for m in self._multisets],
            "cop_turn_values": rows(self._vc),
            "robber_turn_values": rows(self._vr),
        }

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "k": self.k,
            "cop_win": self.cop_win,
            "capture_time": self.capture_time,
        }


def solve(g: Graph, k: int, budget: int = DEFAULT_STATE_BUDGET) -> SolveResult:
    """Exact values for k cops on a connected graph."""
    if not isinstance(k, int) or k < 1 or k > MAX_COPS:
        raise DomainError(f"cop count must be in 1..{MAX_COPS}, got {k}")
    if g.n == 0:
        raise DomainError("empty graph")
    if len(connected_components(g)) != 1:
        raise DomainError("graph must be connected; split it by component first")
    n = g.n
    states = comb(n + k - 1, k) * n * 2
    if states > budget:
        raise BudgetExceededError(
            f"{states} game states exceed the budget of {budget}"
        )

    closed = _closed_neighborhoods(g)
    multisets, base, lookup = _multiset_table(n, k)
    index = {m: i for i, m in enumerate(multisets)}
    succ_flat, succ_starts = _cop_successors(closed, multisets, base, lookup, k)
    m_count = len(multisets)

    captured = np.zeros((m_count, n), dtype=bool)
    for i, cops in enumerate(multisets):
        captured[i, list(set(cops))] = True

    vc = np.full((m_count, n), INFINITY, dtype=np.uint16)
    vr = np.full((m_count, n), INFINITY, dtype=np.uint16)
    vc[captured] = 0
    vr[captured] = 0

    counts = np.diff(succ_starts)
    chunks: list[tuple[int, int]] = []
    lo = 0
    while lo < m_count:
        hi = lo
        rows = 0
        while hi < m_count and (rows == 0 or rows + counts[hi] <= _CHUNK_ROWS):
            rows += counts[hi]
            hi += 1
        chunks.append((lo, hi))
        lo = hi

    # values saturate at 0xFFFE, so no useful change can happen later
    max_sweeps = min(2 * states, 2 * int(INFINITY)) + 8
    for _ in range(max_sweeps):
        prev_vc, prev_vr = vc.copy(), vr.copy()

        for r in range(n):
            np.max(vc[:, closed[r]], axis=1, out=vr[:, r])
        vr[captured] = 0

        for lo, hi in chunks:
            gathered = vr[succ_flat[succ_starts[lo]:succ_starts[hi]], :]
            mins = np.minimum.reduceat(
                gathered, (succ_starts[lo:hi] - succ_starts[lo]), axis=0
            )
            stepped = np.minimum(mins.astype(np.int32) + 1, int(INFINITY))
            vc[lo:hi, :] = stepped.astype(np.uint16)
        vc[captured] = 0

        if np.array_equal(vc, prev_vc) and np.array_equal(vr, prev_vr):
            break
    else:
        raise RuntimeError("value iteration failed to stabilize")

    return SolveResult(g, k, multisets, index, vc, vr)


def cop_number(
    g: Graph, k_max: int = MAX_COPS, budget: int = DEFAULT_STATE_BUDGET
) -> int | None:
    """Least k <= k_max that wins; None when every k fails.

    Disconnected graphs take the maximum over their components: the
    robber commits to one component, so the worst one decides.
    """
    if not isinstance(k_max, int) or k_max < 1 or k_max > MAX_COPS:
        raise DomainError(f"k_max must be in 1..{MAX_COPS}, got {k_max}")
    comps = connected_components(g)
    if len(comps) > 1:
        worst = 0
        for comp in comps:
            sub, _ = induced_subgraph(g, comp)
            one = cop_number(sub, k_max, budget)
            if one is None:
                return None
            worst = max(worst, one)
        return worst
    for k in range(1, k_max + 1):
        if solve(g, k, budget).cop_win:
            return k
    return None


def optimal_capture_time(g: Graph, k: int, budget: int = DEFAULT_STATE_BUDGET) -> int:
    """Game value at optimal initial placements; k must be winning."""
    result = solve(g, k, budget)
    if not result.cop_win:
        raise DomainError(f"{k} cops do not win on this graph")
    return result.capture_time


def solve_json(result: SolveResult) -> str:
    return json.dumps(result.to_json(), sort_keys=True)
