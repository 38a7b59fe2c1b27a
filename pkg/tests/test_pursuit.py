"""Two- and three-cop pursuit strategy: transcripts, bounds, invariants."""

import json
from pathlib import Path

import networkx as nx
import pytest

from copchase.errors import (
    ClassViolationError,
    DomainError,
    StrategyViolationError,
)
from copchase.families import family, gen_random_member
from copchase.graphs import Graph
from copchase.oracle import optimal_capture_time, solve
from copchase.pursuit import (
    OracleRobber,
    Phase,
    PursuitGame,
    make_robber_policy,
    path_cover_holds,
    simulate,
)

FIXTURES = Path(__file__).parent / "fixtures"


class StandStillRobber:
    """Park on one vertex and never move."""

    def __init__(self, spot: int):
        self.spot = spot

    def place(self, game):
        return self.spot

    def move(self, game):
        return game.robber


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges)
    return h


# ----------------------------------------------------------------------
# golden play-out


@pytest.fixture(scope="module")
def golden():
    with open(FIXTURES / "golden_c5hat7_protocol.json") as fh:
        return json.load(fh)["transcript"]


@pytest.fixture(scope="module")
def played():
    return simulate(family("c5hat7"), 2, 0, StandStillRobber(6), 15)


class TestGoldenTranscript:
    def test_exact_replay(self, golden, played):
        assert played.to_json() == golden

    def test_capture_round_and_bound(self, played):
        n = family("c5hat7").n
        assert played.captured_at == 6
        assert played.captured_at <= 2 * n
        assert played.timeout is None
        assert played.finished

    def test_second_vertex_choice(self, played):
        assert played.u1 == 1

    def test_step_vocabulary(self, played):
        data = played.to_json()
        for mv in data["moves"]:
            if mv["actor"] == "robber":
                assert mv["step"] is None
            else:
                assert mv["step"] in {"init", "sync", "progress", "capture"}

    def test_moves_walk_edges_or_stand(self, played):
        g = family("c5hat7")
        for mv in played.moves:
            assert mv.frm == mv.to or g.has_edge(mv.frm, mv.to)


# ----------------------------------------------------------------------
# capture bounds across fixtures and robber policies

BOUND_GRAPHS = [
    "c5hat7",
    "twoclique7",
    "wheel5",
    "hung_wheel5",
    "odd_cycle:7",
    "clique:6",
    "path:8",
    "c5_gluing:2",
]


def named_graph(label: str) -> Graph:
    name, _, arg = label.partition(":")
    return family(name, int(arg)) if arg else family(name)


class TestCaptureBounds:
    @pytest.mark.parametrize("label", BOUND_GRAPHS)
    @pytest.mark.parametrize("kind", ["random", "greedy", "optimal"])
    def test_two_cops_within_double_n(self, label, kind):
        g = named_graph(label)
        t = simulate(g, 2, 0, kind, 2 * g.n + 1, seed=11)
        assert t.captured_at is not None
        assert t.captured_at <= 2 * g.n + 1

    @pytest.mark.parametrize("label", BOUND_GRAPHS)
    @pytest.mark.parametrize("kind", ["random", "greedy", "optimal"])
    def test_three_cops_within_n(self, label, kind):
        g = named_graph(label)
        t = simulate(g, 3, 0, kind, g.n + 1, seed=11)
        assert t.captured_at is not None
        assert t.captured_at <= g.n + 1

    def test_random_members_two_cops(self):
        count = 0
        for seed in range(40):
            g = gen_random_member(8, "1/4", seed)
            if g is None:
                continue
            count += 1
            t = simulate(g, 2, 0, "greedy", 2 * g.n + 1, seed=seed)
            assert t.captured_at is not None
        assert count >= 5

    @pytest.mark.parametrize("label", ["c5hat7", "twoclique7", "wheel5"])
    def test_never_beats_oracle_optimum(self, label):
        g = named_graph(label)
        res = solve(g, 2)
        t = simulate(g, 2, 0, OracleRobber(res), 2 * g.n + 1,
                     skip_member_check=True)
        assert t.captured_at >= optimal_capture_time(g, 2)


# ----------------------------------------------------------------------
# structural invariant during play


class TestPathCover:
    @pytest.mark.parametrize("label", BOUND_GRAPHS)
    def test_cover_after_every_cop_turn(self, label):
        g = named_graph(label)
        seen = []

        def check(game):
            # skip the terminal state: a captured robber has no escape paths
            if game.phase is not Phase.CAPTURED:
                seen.append(path_cover_holds(game))

        t = simulate(g, 2, 0, "greedy", 2 * g.n + 1, observer=check)
        # dense graphs can end on the first turn with no live state to check
        assert t.captured_at is not None
        assert all(seen)


# ----------------------------------------------------------------------
# second-vertex selection


class TestSecondVertex:
    def test_least_over_shortest_paths(self):
        g = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                      (2, 4), (3, 4)])
        game = PursuitGame(g, 2, 0)
        game.place_robber(4)
        back = nx.shortest_path_length(to_networkx(g), 4)
        want = min(w for w in g.neighbors(0) if back[w] == back[0] - 1)
        assert game.u1 == want == 2

    def test_adjacent_placement_second_vertex_is_robber(self):
        g = family("clique", 4)
        game = PursuitGame(g, 2, 0)
        game.place_robber(3)
        assert game.u1 == 3
        moves = game.cop_turn()
        assert [m.step for m in moves] == ["capture"]
        assert game.phase == Phase.CAPTURED
        assert game.transcript.captured_at == 1


# ----------------------------------------------------------------------
# degenerate and terminal behavior


class TestEndpoints:
    def test_single_vertex_graph(self):
        game = PursuitGame(family("clique", 1), 2, 0)
        assert game.legal_robber_moves() == [0]
        game.place_robber(0)
        assert game.phase == Phase.CAPTURED
        assert game.transcript.captured_at == 0

    def test_two_vertex_graph(self):
        t = simulate(family("clique", 2), 2, 0, "greedy", 5)
        assert t.captured_at == 1

    def test_suicide_placement(self):
        t = simulate(family("path", 5), 2, 0, StandStillRobber(0), 5)
        assert t.captured_at == 0
        assert len(t.moves) == 1

    def test_robber_walks_into_cop(self):
        g = family("path", 3)
        game = PursuitGame(g, 2, 0)
        game.place_robber(2)
        game.cop_turn()
        game.robber_turn(1)
        assert game.phase == Phase.CAPTURED
        assert game.transcript.captured_at == 1

    def test_timeout_outcome_shape(self):
        t = simulate(family("path", 5), 2, 0, "greedy", 1)
        assert t.captured_at is None
        assert t.timeout == 1
        assert t.finished
        assert t.to_json()["outcome"] == {"timeout": 1}

    def test_unfinished_outcome_is_null(self):
        game = PursuitGame(family("c5hat7"), 2, 0)
        game.place_robber(6)
        game.cop_turn()
        data = game.transcript.to_json()
        assert data["outcome"] is None
        assert not game.transcript.finished


# ----------------------------------------------------------------------
# guards


class TestGuards:
    def test_non_member_rejected(self):
        with pytest.raises(ClassViolationError, match="claw"):
            simulate(family("f6"), 2, 0, "greedy", 10)

    def test_member_check_skip_flag(self):
        g = family("c5hat7")
        t = simulate(g, 2, 0, "greedy", 2 * g.n + 1, skip_member_check=True)
        assert t.captured_at is not None

    def test_tripwire_outside_the_class(self):
        # two cops cannot clear Petersen, and the strategy says so loudly
        g = family("petersen")
        with pytest.raises(StrategyViolationError, match="guarded low region"):
            simulate(g, 2, 0, "greedy", 25, skip_member_check=True)

    def test_cop_count_bounds(self):
        for k in (0, 1, 4):
            with pytest.raises(DomainError, match="2 or 3"):
                PursuitGame(family("path", 4), k, 0)

    def test_start_vertex_range(self):
        with pytest.raises(DomainError, match="out of range"):
            PursuitGame(family("path", 4), 2, 9)

    def test_disconnected_rejected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(DomainError, match="connected"):
            PursuitGame(g, 2, 0)

    def test_round_limit_positive(self):
        with pytest.raises(DomainError, match="round limit"):
            simulate(family("path", 4), 2, 0, "greedy", 0)

    def test_place_twice(self):
        game = PursuitGame(family("path", 4), 2, 0)
        game.place_robber(3)
        with pytest.raises(DomainError, match="already placed"):
            game.place_robber(2)

    def test_place_out_of_range(self):
        game = PursuitGame(family("path", 4), 2, 0)
        with pytest.raises(DomainError, match="out of range"):
            game.place_robber(7)

    def test_wrong_phase_turns(self):
        game = PursuitGame(family("path", 4), 2, 0)
        with pytest.raises(DomainError, match="not the cops' turn"):
            game.cop_turn()
        with pytest.raises(DomainError, match="not the robber's turn"):
            game.robber_turn(3)

    def test_illegal_robber_step(self):
        game = PursuitGame(family("path", 5), 2, 0)
        game.place_robber(4)
        game.cop_turn()
        with pytest.raises(DomainError, match="illegal move"):
            game.robber_turn(2)

    def test_unknown_policy_kind(self):
        with pytest.raises(DomainError, match="unknown robber policy"):
            make_robber_policy("psychic")


class TestLegalMoves:
    def test_placement_phase_offers_all_vertices(self):
        game = PursuitGame(family("path", 4), 2, 0)
        assert game.legal_robber_moves() == [0, 1, 2, 3]

    def test_move_phase_offers_closed_neighborhood(self):
        game = PursuitGame(family("path", 5), 2, 0)
        game.place_robber(3)
        game.cop_turn()
        assert game.legal_robber_moves() == [2, 3, 4]

    def test_captured_phase_offers_nothing(self):
        game = PursuitGame(family("clique", 1), 2, 0)
        game.place_robber(0)
        assert game.legal_robber_moves() == []


# ----------------------------------------------------------------------
# three-cop layout and determinism


class TestThreeCops:
    @pytest.mark.parametrize("label", BOUND_GRAPHS)
    def test_guard_cop_only_leaves_to_capture(self, label):
        g = named_graph(label)
        t = simulate(g, 3, 0, "greedy", g.n + 1, seed=3)
        for mv in t.to_json()["moves"]:
            if mv["actor"] == "c0":
                assert mv["step"] == "capture"

    def test_actor_names(self):
        two = simulate(family("path", 6), 2, 0, "greedy", 13)
        three = simulate(family("path", 6), 3, 0, "greedy", 7)
        assert {m.actor for m in two.moves} <= {"robber", "c1", "c2"}
        assert {m.actor for m in three.moves} <= {"robber", "c0", "c1", "c2"}


class TestDeterminism:
    @pytest.mark.parametrize("kind", ["random", "greedy", "optimal"])
    def test_same_seed_same_transcript(self, kind):
        g = family("c5_gluing", 2)
        one = simulate(g, 2, 0, kind, 2 * g.n + 1, seed=9)
        two = simulate(g, 2, 0, kind, 2 * g.n + 1, seed=9)
        assert json.dumps(one.to_json(), sort_keys=True) == \
            json.dumps(two.to_json(), sort_keys=True)

    def test_different_seed_may_differ_but_stays_legal(self):
        g = family("c5_gluing", 2)
        for seed in range(4):
            t = simulate(g, 2, 0, "random", 2 * g.n + 1, seed=seed)
            assert t.captured_at is not None
