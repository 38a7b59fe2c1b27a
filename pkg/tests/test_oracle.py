"""Exact game values: frozen fixtures and brute-force agreement."""

import pytest

from copchase.errors import BudgetExceededError, DomainError
from copchase.families import family
from copchase.graphs import Graph
from copchase.oracle import cop_number, optimal_capture_time, solve, solve_json

from helpers import (
    brute_force_capture_time,
    brute_force_values,
    dismantlable,
    random_connected_graph,
    random_graph,
)


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


class TestFixedValues:
    def test_paths_are_one_cop_win(self):
        assert solve(path(4), 1).cop_win
        assert solve(path(5), 1).capture_time == 2

    def test_c5_needs_two_cops(self):
        res1 = solve(cycle(5), 1)
        assert not res1.cop_win and res1.capture_time is None
        res2 = solve(cycle(5), 2)
        assert res2.cop_win and res2.capture_time == 1
        assert res2.initial_cops == (0, 2)

    def test_clique_immediate(self):
        res = solve(family("clique", 5), 1)
        assert res.capture_time == 1

    def test_petersen_crossover(self):
        assert not solve(family("petersen"), 2).cop_win
        res = solve(family("petersen"), 3)
        assert res.cop_win and res.capture_time == 1
        assert res.initial_cops == (0, 2, 6)

    def test_c5hat7(self):
        assert not solve(family("c5hat7"), 1).cop_win
        res = solve(family("c5hat7"), 2)
        assert res.capture_time == 1 and res.initial_cops == (1, 6)

    def test_long_odd_cycle_three_cops(self):
        assert solve(cycle(25), 3).capture_time == 4

    def test_json_shape(self):
        res = solve(path(4), 1)
        want = brute_force_capture_time(path(4), 1)
        assert res.to_json() == {"n": 4, "k": 1, "cop_win": True, "capture_time": want}
        assert solve_json(res).startswith("{")


@pytest.fixture(scope="module")
def hat2():
    return solve(family("c5hat7"), 2)


class TestStateQueries:
    def test_survival_map_from_start(self, hat2):
        survival = hat2.survival_map((0, 0), range(7))
        assert survival == {0: 0, 1: 1, 2: 4, 3: 4, 4: 4, 5: 4, 6: 4}

    def test_best_placement_ties_to_least_vertex(self, hat2):
        assert hat2.robber_best_placement((0, 0)) == 2
        assert hat2.value((0, 0), 2) == 4

    def test_robber_best_move(self, hat2):
        assert hat2.robber_best_move((2, 3), 6) == 6

    def test_cop_best_moves_legal_and_least(self, hat2):
        assert hat2.cop_best_moves((0, 0), 6) == (0, 1)
        g = family("c5hat7")
        cops = (2, 5)
        move = hat2.cop_best_moves(cops, 6)
        for frm, to in zip(cops, sorted(move)):
            pass
        for to in move:
            assert any(
                to == c or g.has_edge(c, to) for c in cops
            )

    def test_value_accepts_any_cop_order(self, hat2):
        assert hat2.value((6, 1), 4) == hat2.value((1, 6), 4)

    def test_rejects_foreign_positions(self, hat2):
        with pytest.raises(DomainError):
            hat2.value((0, 9), 3)


class TestAgainstBruteForce:
    @pytest.mark.parametrize("seed", range(12))
    @pytest.mark.parametrize("k", [1, 2])
    def test_all_state_values_match(self, seed, k):
        g = random_connected_graph(seed % 3 + 4, 0.45, seed)
        res = solve(g, k)
        vc, vr, multisets = brute_force_values(g, k)
        for c in multisets:
            for r in range(g.n):
                want = vc[c, r]
                got = res.value(c, r)
                assert got == (None if want == float("inf") else want)
                want_r = vr[c, r]
                got_r = res.value(c, r, robber_to_move=True)
                assert got_r == (None if want_r == float("inf") else want_r)

    @pytest.mark.parametrize("seed", range(12))
    def test_capture_time_matches(self, seed):
        g = random_connected_graph(6, 0.4, seed + 30)
        for k in (1, 2):
            res = solve(g, k)
            want = brute_force_capture_time(g, k)
            assert res.capture_time == want
            assert res.cop_win == (want is not None)

    @pytest.mark.parametrize("seed", range(25))
    def test_one_cop_win_iff_dismantlable(self, seed):
        g = random_connected_graph(seed % 5 + 5, 0.35 + (seed % 3) * 0.15, seed)
        assert solve(g, 1).cop_win == dismantlable(g)


class TestCopNumber:
    def test_disconnected_takes_worst_component(self):
        # K3 alone is one-cop; the C5 component forces two
        g = Graph(8, [(0, 1), (1, 2), (0, 2)] + [(3 + i, 3 + (i + 1) % 5) for i in range(5)])
        assert cop_number(g) == 2

    def test_petersen_above_two(self):
        assert cop_number(family("petersen"), k_max=2) is None
        assert cop_number(family("petersen")) == 3

    def test_single_vertex(self):
        assert cop_number(Graph(1, [])) == 1

    def test_optimal_capture_time_requires_win(self):
        with pytest.raises(DomainError, match="do not win"):
            optimal_capture_time(cycle(5), 1)
        assert optimal_capture_time(cycle(5), 2) == 1


class TestGuards:
    def test_cop_count_bounds(self):
        for k in (0, 5, -1):
            with pytest.raises(DomainError):
                solve(path(3), k)

    def test_disconnected_rejected(self):
        with pytest.raises(DomainError, match="connected"):
            solve(Graph(4, [(0, 1), (2, 3)]), 1)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            solve(cycle(9), 3, budget=10)

    def test_deterministic_result(self):
        a = solve(family("c5hat7"), 2)
        b = solve(family("c5hat7"), 2)
        assert a.initial_cops == b.initial_cops
        assert a.capture_time == b.capture_time


class TestPolicy:
    def test_policy_drives_capture_on_path(self):
        res = solve(path(5), 1)
        policy = res.policy_json()
        assert policy["k"] == 1
        # drive the tabulated policy: cop follows moves, robber plays best
        cops = res.initial_cops
        robber = res.robber_best_placement(cops)
        rounds = 0
        while robber not in cops:
            cops = res.cop_best_moves(cops, robber)
            rounds += 1
            if robber in cops:
                break
            robber = res.robber_best_move(cops, robber)
        assert rounds == res.capture_time
