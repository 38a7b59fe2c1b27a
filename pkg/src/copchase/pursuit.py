"""Turn-based pursuit with constructive cop strategies.

Two variants share one engine.  With three cops, one cop is pinned on
the start vertex forever while the other two sweep upward through the
level structure.  With two cops, the second cop guards the start vertex
only until the chase first meets a level component with a mate; it then
walks up through the secured low levels and joins the sweep, after
which the start vertex and its box are provably unreachable for the
robber.

The sweep alternates two maneuvers.  Progressing advances the pair one
level, onto king vertices of the next component on the chosen monotone
path and of that component's mate; each cop needs at most two moves,
stepping through an in-component intermediate when its target king is
not adjacent.  Synchronizing regroups the trailing cop into the leading
cop's component when progressing is not available.  Every cop turn
starts with a capture check, and structural assumptions are enforced by
runtime tripwires that raise instead of playing an unsound move.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from .errors import ClassViolationError, DomainError, StrategyViolationError
from .graphs import Graph, bfs_distances, connected_components, graph_to_json
from .levels import Decomposition, decompose, iter_monotone_paths
from .recognition import is_member


class Phase(Enum):
    ROBBER_PLACE = "robber_place"
    COPS_MOVE = "cops_move"
    ROBBER_MOVE = "robber_move"
    CAPTURED = "captured"


class Mode(Enum):
    INIT = "init"
    SINGULAR_CHASE = "singular_chase"
    SYNCHRONIZING = "synchronizing"
    PROGRESSING_MID = "progressing_mid"
    MAIN = "main"


@dataclass
class Move:
    actor: str
    frm: int
    to: int
    step: str | None

    def to_json(self) -> dict:
        return {"actor": self.actor, "from": self.frm, "to": self.to,
                "step": self.step}


@dataclass
class StrategyMemory:
    decomposition: Decomposition
    mode: Mode
    free_second_cop: bool
    comp_c1: tuple[int, int] | None = None
    comp_c2: tuple[int, int] | None = None
    sync_path: tuple[int, ...] = ()
    sync_cop: int | None = None
    pending: dict[int, int] = field(default_factory=dict)
    resume_mode: Mode = Mode.MAIN
    origin_level: int | None = None


@dataclass
class Transcript:
    graph: Graph
    u0: int
    cops: int
    u1: int | None = None
    moves: list[Move] = field(default_factory=list)
    captured_at: int | None = None
    timeout: int | None = None

    @property
    def finished(self) -> bool:
        return self.captured_at is not None or self.timeout is not None

    def to_json(self) -> dict:
        if self.captured_at is not None:
            outcome = {"captured_at": self.captured_at}
        elif self.timeout is not None:
            outcome = {"timeout": self.timeout}
        else:
            outcome = None
        return {
            "graph": graph_to_json(self.graph),
            "u0": self.u0,
            "u1": self.u1,
            "cops": self.cops,
            "moves": [m.to_json() for m in self.moves],
            "outcome": outcome,
        }


def _lex_shortest_path(g: Graph, source: int, target: int,
                       allowed: set[int]) -> tuple[int, ...] | None:
    """Lexicographically least shortest path within an allowed set."""
    if source not in allowed or target not in allowed:
        return None
    back = bfs_distances(g, target, allowed)
    if source not in back:
        return None
    path = [source]
    while path[-1] != target:
        here = path[-1]
        step = min(
            v for v in g.neighbors(here)
            if back.get(v, -1) == back[here] - 1
        )
        path.append(step)
    return tuple(path)


class PursuitGame:
    """One full-information pursuit play-out on a connected graph."""

    def __init__(self, graph: Graph, cop_count: int, u0: int):
        if cop_count not in (2, 3):
            raise DomainError(f"cop count must be 2 or 3, got {cop_count}")
        if not 0 <= u0 < graph.n:
            raise DomainError(f"start vertex {u0} out of range")
        if len(connected_components(graph)) != 1:
            raise DomainError(
                "graph must be connected; split it by component first"
            )
        self.graph = graph
        self.cop_count = cop_count
        self.u0 = u0
        self.cops: list[int] = [u0] * cop_count
        self.robber: int | None = None
        self.phase = Phase.ROBBER_PLACE
        self.round = 0
        self.memory: StrategyMemory | None = None
        self.transcript = Transcript(graph=graph, u0=u0, cops=cop_count)

    # cop index layout: two cops = [c1, c2]; three cops = [c0, c1, c2]
    def _actor(self, i: int) -> str:
        names = ("c1", "c2") if self.cop_count == 2 else ("c0", "c1", "c2")
        return names[i]

    def _pinned(self) -> set[int]:
        if self.cop_count == 3:
            return {0}
        return set() if self.memory.free_second_cop else {1}

    def _chasers(self) -> list[int]:
        return [i for i in range(self.cop_count) if i not in self._pinned()]

    @property
    def u1(self) -> int | None:
        return self.transcript.u1

    def legal_robber_moves(self) -> list[int]:
        if self.phase == Phase.ROBBER_PLACE:
            return list(self.graph.vertices())
        if self.phase == Phase.ROBBER_MOVE:
            return sorted({self.robber, *self.graph.neighbors(self.robber)})
        return []

    def place_robber(self, v: int) -> None:
        if self.phase != Phase.ROBBER_PLACE:
            raise DomainError("robber is already placed")
        if not 0 <= v < self.graph.n:
            raise DomainError(f"vertex {v} out of range")
        self.robber = v
        self.transcript.moves.append(Move("robber", v, v, None))
        if v == self.u0:
            self.phase = Phase.CAPTURED
            self.transcript.captured_at = 0
            return
        u1 = self._second_vertex(v)
        self.transcript.u1 = u1
        d = decompose(self.graph, self.u0, u1)
        self.memory = StrategyMemory(
            decomposition=d,
            mode=Mode.INIT,
            free_second_cop=(self.cop_count == 3),
        )
        self.phase = Phase.COPS_MOVE

    def _second_vertex(self, v: int) -> int:
        """Least second vertex over all shortest paths from u0 to v."""
        back = bfs_distances(self.graph, v, set(self.graph.vertices()))
        want = back[self.u0] - 1
        return min(w for w in self.graph.neighbors(self.u0) if back[w] == want)

    # ------------------------------------------------------------------
    # cop side

    def cop_turn(self) -> list[Move]:
        if self.phase != Phase.COPS_MOVE:
            raise DomainError(f"not the cops' turn (phase {self.phase.value})")
        moves = self._plan_cop_moves()
        for mv in moves:
            idx = self._cop_index_for(mv)
            self.cops[idx] = mv.to
        self.transcript.moves.extend(moves)
        self._refresh_comps()
        if any(c == self.robber for c in self.cops):
            self.phase = Phase.CAPTURED
            self.transcript.captured_at = self.round + 1
        else:
            self.phase = Phase.ROBBER_MOVE
        return moves

    def _cop_index_for(self, mv: Move) -> int:
        names = ("c1", "c2") if self.cop_count == 2 else ("c0", "c1", "c2")
        return names.index(mv.actor)

    def _refresh_comps(self) -> None:
        m = self.memory
        chasers = self._chasers()
        slots = [None, None]
        for pos, i in enumerate(chasers[:2]):
            slots[pos] = m.decomposition.component_of.get(self.cops[i])
        m.comp_c1, m.comp_c2 = slots

    def _plan_cop_moves(self) -> list[Move]:
        m = self.memory
        r = self.robber
        g = self.graph

        adjacent = [i for i, c in enumerate(self.cops)
                    if c == r or g.has_edge(c, r)]
        if adjacent:
            i = min(adjacent)
            return [Move(self._actor(i), self.cops[i], r, "capture")]

        self._tripwires()

        if m.mode == Mode.INIT:
            u1 = self.u1
            out = [Move(self._actor(i), self.cops[i], u1, "init")
                   for i in self._chasers()]
            m.mode = Mode.MAIN if self.cop_count == 3 else Mode.SINGULAR_CHASE
            return out

        if m.mode == Mode.SYNCHRONIZING:
            return self._step_sync()

        if m.mode == Mode.PROGRESSING_MID:
            return self._finish_progress()

        if m.mode == Mode.SINGULAR_CHASE:
            return self._chase_step()

        return self._main_step()

    def _tripwires(self) -> None:
        m = self.memory
        d = m.decomposition
        r = self.robber
        if r == self.u0 or r in d.box:
            if self.cop_count == 2 and m.free_second_cop:
                raise StrategyViolationError(
                    f"robber reached {r} in the guarded low region after the"
                    " second cop was freed"
                )
            raise StrategyViolationError(
                f"robber at {r} was not captured by the start-vertex guard"
            )
        if r not in d.level_of:
            raise StrategyViolationError(
                f"robber at {r} left the decomposed arena uncaptured"
            )
        if m.mode == Mode.PROGRESSING_MID and m.origin_level is not None:
            if d.level_of[r] < m.origin_level:
                raise StrategyViolationError(
                    f"robber descended to level {d.level_of[r]} below the"
                    f" progressing cops at level {m.origin_level}"
                )

    def _select_path(self) -> tuple[int, ...]:
        """Monotone path u1 -> robber, preferring cop components."""
        m = self.memory
        d = m.decomposition
        g = self.graph
        r = self.robber
        top = d.level_of[r]
        reach: dict[int, set[int]] = {top: {r}}
        for lvl in range(top - 1, 0, -1):
            up = reach[lvl + 1]
            reach[lvl] = {
                v for v in d.levels[lvl]
                if any(g.has_edge(v, w) for w in up)
            }
        cop_comps = {
            d.component_of.get(self.cops[i]) for i in self._chasers()
        } - {None}
        path = [d.u1]
        for lvl in range(2, top + 1):
            options = [v for v in sorted(reach[lvl])
                       if g.has_edge(path[-1], v)]
            if not options:
                raise StrategyViolationError(
                    "monotone path construction dead-ended; the level"
                    " structure does not match a class member"
                )
            preferred = [v for v in options if d.component_of[v] in cop_comps]
            path.append(preferred[0] if preferred else options[0])
        return tuple(path)

    def _king_route(self, cop_pos: int, own_comp, target_comp,
                    taken: set[int]) -> tuple[int, int | None]:
        """Pick a reachable king of the target component.

        Returns (king, first_step): first_step is None when the king is
        adjacent, otherwise an in-component intermediate adjacent to it.
        Kings already claimed by the other cop are avoided when another
        choice of the same cost exists.
        """
        g = self.graph
        if not target_comp.kings:
            raise StrategyViolationError(
                f"component {target_comp.id} has no king vertex to occupy"
            )
        direct = [k for k in target_comp.kings if g.has_edge(cop_pos, k)]
        via: list[tuple[int, int]] = []
        if own_comp is not None:
            for k in target_comp.kings:
                if k in direct:
                    continue
                mids = [w for w in own_comp.vertices
                        if w != cop_pos and g.has_edge(w, k)]
                if mids:
                    via.append((k, min(mids)))
        for pool in (direct, [k for k, _ in via]):
            fresh = [k for k in pool if k not in taken]
            if fresh:
                pool = fresh
            if pool:
                k = min(pool)
                if k in direct:
                    return k, None
                return k, min(w for kk, w in via if kk == k)
        raise StrategyViolationError(
            f"no king of component {target_comp.id} is reachable within"
            " two moves"
        )

    def _advance(self, assignments: list[tuple[int, object]],
                 step: str, resume: Mode) -> list[Move]:
        """Send each (cop, target component) to a king, one or two moves."""
        m = self.memory
        d = m.decomposition
        out: list[Move] = []
        taken: set[int] = set()
        pending: dict[int, int] = {}
        for i, comp in assignments:
            pos = self.cops[i]
            own = d.by_id.get(d.component_of.get(pos))
            king, mid = self._king_route(pos, own, comp, taken)
            taken.add(king)
            if mid is None:
                out.append(Move(self._actor(i), pos, king, step))
            else:
                out.append(Move(self._actor(i), pos, mid, step))
                pending[i] = king
        if pending:
            m.pending = pending
            m.origin_level = min(
                d.level_of[self.cops[i]] for i, _ in assignments
            )
            m.mode = Mode.PROGRESSING_MID
            m.resume_mode = resume
        else:
            m.mode = resume
        return out

    def _finish_progress(self) -> list[Move]:
        m = self.memory
        g = self.graph
        out = []
        for i, king in sorted(m.pending.items()):
            if not g.has_edge(self.cops[i], king):
                raise StrategyViolationError(
                    f"intermediate vertex {self.cops[i]} lost adjacency to"
                    f" king {king}"
                )
            step = "init" if m.resume_mode == Mode.SINGULAR_CHASE else "progress"
            out.append(Move(self._actor(i), self.cops[i], king, step))
        m.pending = {}
        m.origin_level = None
        m.mode = m.resume_mode
        return out

    def _step_sync(self) -> list[Move]:
        m = self.memory
        nxt, rest = m.sync_path[0], m.sync_path[1:]
        i = m.sync_cop
        mv = Move(self._actor(i), self.cops[i], nxt, "sync")
        m.sync_path = rest
        if not rest:
            m.mode = Mode.MAIN
            m.sync_cop = None
        return [mv]

    def _begin_sync(self, i: int, target_comp, lo_level: int,
                    hi_level: int | None) -> list[Move]:
        """Walk cop i to a king of the target component, levels bounded."""
        m = self.memory
        d = m.decomposition
        other_positions = {self.cops[j] for j in range(self.cop_count)
                           if j != i}
        kings = [k for k in target_comp.kings if k not in other_positions]
        target = min(kings) if kings else min(target_comp.kings)
        allowed = {
            v for v, lvl in d.level_of.items()
            if lo_level <= lvl and (hi_level is None or lvl <= hi_level)
        }
        allowed.add(self.cops[i])
        path = _lex_shortest_path(self.graph, self.cops[i], target, allowed)
        if path is None or len(path) < 2:
            raise StrategyViolationError(
                f"no synchronizing route from {self.cops[i]} to king"
                f" {target} within the allowed levels"
            )
        m.sync_cop = i
        m.sync_path = path[1:]
        m.mode = Mode.SYNCHRONIZING
        return self._step_sync()

    def _chase_step(self) -> list[Move]:
        """Second-cop-guarded phase: advance c1 while mates are absent."""
        m = self.memory
        d = m.decomposition
        path = self._select_path()
        c1 = 0
        comp_id = d.component_of.get(self.cops[c1])
        lvl = d.level_of[self.cops[c1]]
        if comp_id is None or d.component_of[path[lvl - 1]] != comp_id:
            raise StrategyViolationError(
                "chase path no longer runs through the lead cop's component"
            )
        if d.level_of[self.robber] <= lvl:
            raise StrategyViolationError(
                "robber slipped to the lead cop's level without capture"
            )
        nxt = d.by_id[d.component_of[path[lvl]]]
        if nxt.mate_id is None:
            return self._advance([(c1, nxt)], "init", Mode.SINGULAR_CHASE)
        m.free_second_cop = True
        own = d.by_id[comp_id]
        return self._begin_sync(1, own, 0, lvl)

    def _main_step(self) -> list[Move]:
        m = self.memory
        d = m.decomposition
        g = self.graph
        path = self._select_path()
        chasers = self._chasers()
        comp_of_cop = {
            i: d.component_of.get(self.cops[i]) for i in chasers
        }
        hit = None
        for lvl in range(len(path), 0, -1):
            cid = d.component_of[path[lvl - 1]]
            owners = [i for i in chasers if comp_of_cop[i] == cid]
            if owners:
                hit = lvl
                lead = min(owners)
                break
        if hit is None:
            raise StrategyViolationError(
                "no monotone path to the robber meets a cop's component"
            )
        rob_lvl = d.level_of[self.robber]
        if hit >= rob_lvl:
            raise StrategyViolationError(
                "robber shares the cops' component but was not captured"
            )
        lead_comp = d.by_id[comp_of_cop[lead]]
        nxt = d.by_id[d.component_of[path[hit]]]
        trail = min(i for i in chasers if i != lead)
        trail_cid = comp_of_cop[trail]
        synced = trail_cid == comp_of_cop[lead]
        mate = d.by_id[nxt.mate_id] if nxt.mate_id is not None else None

        if mate is not None and trail_cid is not None:
            trail_comp = d.by_id[trail_cid]
            linked = any(
                g.mask(v) & _comp_mask(mate) for v in trail_comp.vertices
            )
            if linked:
                return self._advance(
                    [(lead, nxt), (trail, mate)], "progress", Mode.MAIN
                )
        if synced:
            # nothing reaches the mate side monotonically, sweep together
            return self._advance(
                [(lead, nxt), (trail, nxt)], "progress", Mode.MAIN
            )
        return self._begin_sync(trail, lead_comp, d.level_of[self.cops[lead]],
                                None)

    # ------------------------------------------------------------------
    # robber side

    def robber_turn(self, v: int) -> None:
        if self.phase != Phase.ROBBER_MOVE:
            raise DomainError(f"not the robber's turn (phase {self.phase.value})")
        if v != self.robber and not self.graph.has_edge(self.robber, v):
            raise DomainError(f"illegal move {self.robber} -> {v}")
        self.transcript.moves.append(Move("robber", self.robber, v, None))
        self.robber = v
        if v in self.cops:
            self.phase = Phase.CAPTURED
            self.transcript.captured_at = self.round + 1
        else:
            self.round += 1
            self.phase = Phase.COPS_MOVE


def _comp_mask(comp) -> int:
    mask = 0
    for v in comp.vertices:
        mask |= 1 << v
    return mask


# ----------------------------------------------------------------------
# robber policies


class RandomRobber:
    """Uniform over legal choices, reproducible from the seed."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def place(self, game: PursuitGame) -> int:
        return self.rng.choice(sorted(game.legal_robber_moves()))

    def move(self, game: PursuitGame) -> int:
        return self.rng.choice(sorted(game.legal_robber_moves()))


class GreedyDistanceRobber:
    """Maximize the distance to the nearest cop; ties to the least vertex."""

    def _score(self, game: PursuitGame) -> dict[int, int]:
        full = set(game.graph.vertices())
        best: dict[int, int] = {}
        for c in set(game.cops):
            dist = bfs_distances(game.graph, c, full)
            for v, dv in dist.items():
                if v not in best or dv < best[v]:
                    best[v] = dv
        return best

    def _pick(self, game: PursuitGame, options: list[int]) -> int:
        score = self._score(game)
        return max(sorted(options), key=lambda v: (score[v], -v))

    def place(self, game: PursuitGame) -> int:
        return self._pick(game, game.legal_robber_moves())

    def move(self, game: PursuitGame) -> int:
        return self._pick(game, game.legal_robber_moves())


class OracleRobber:
    """Play the move with the largest exact survival value."""

    def __init__(self, solve_result):
        self.tables = solve_result

    def place(self, game: PursuitGame) -> int:
        return self.tables.robber_best_placement(tuple(game.cops))

    def move(self, game: PursuitGame) -> int:
        return self.tables.robber_best_move(tuple(game.cops), game.robber)


def make_robber_policy(kind: str, *, seed: int = 0, graph: Graph = None,
                       cop_count: int = None, solve_result=None):
    if kind == "random":
        return RandomRobber(seed)
    if kind == "greedy":
        return GreedyDistanceRobber()
    if kind == "optimal":
        if solve_result is None:
            if graph is None or cop_count is None:
                raise DomainError(
                    "optimal robber needs solved oracle tables"
                )
            from .oracle import solve

            solve_result = solve(graph, cop_count)
        return OracleRobber(solve_result)
    raise DomainError(f"unknown robber policy {kind!r}")


# ----------------------------------------------------------------------
# free-function wrappers and the simulation driver


def new_game(g: Graph, cop_count: int, u0: int) -> PursuitGame:
    return PursuitGame(g, cop_count, u0)


def place_robber(game: PursuitGame, v: int) -> PursuitGame:
    game.place_robber(v)
    return game


def cop_policy_step(game: PursuitGame) -> list[Move]:
    return game.cop_turn()


def robber_policy(game: PursuitGame, policy) -> int:
    if game.phase == Phase.ROBBER_PLACE:
        return policy.place(game)
    return policy.move(game)


def path_cover_holds(game: PursuitGame) -> bool:
    """Every monotone robber-to-u1 path meets a chasing cop's component."""
    d = game.memory.decomposition
    if game.robber not in d.level_of:
        return False
    cop_comps = {
        d.component_of.get(game.cops[i]) for i in game._chasers()
    } - {None}
    for path in iter_monotone_paths(d, game.robber):
        if not any(d.component_of[v] in cop_comps for v in path):
            return False
    return True


def simulate(g: Graph, cop_count: int, u0: int, robber_kind,
             round_limit: int, *, seed: int = 0, skip_member_check: bool = False,
             observer=None) -> Transcript:
    """Play one full game of the cop strategy against a robber policy."""
    if round_limit < 1:
        raise DomainError("round limit must be at least 1")
    if not skip_member_check:
        report = is_member(g)
        if not report.member:
            raise ClassViolationError(
                f"input graph is outside the class: claw={report.claw},"
                f" even_hole={report.even_hole}"
            )
    if isinstance(robber_kind, str):
        policy = make_robber_policy(robber_kind, seed=seed, graph=g,
                                    cop_count=cop_count)
    else:
        policy = robber_kind
    game = PursuitGame(g, cop_count, u0)
    game.place_robber(policy.place(game))
    while game.phase != Phase.CAPTURED and game.round < round_limit:
        game.cop_turn()
        if observer is not None:
            observer(game)
        if game.phase == Phase.CAPTURED:
            break
        game.robber_turn(policy.move(game))
    if game.phase != Phase.CAPTURED:
        game.transcript.timeout = round_limit
    return game.transcript
