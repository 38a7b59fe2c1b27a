"""Shared fixtures: the standard corpus and a session-wide solve cache."""

from __future__ import annotations

import pytest

from copchase.families import standard_corpus
from copchase.oracle import SolveResult, solve

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus() -> list:
    return standard_corpus()


class SolverCache:
    """Memoizes oracle solves across the suite; keyed by corpus label."""

    def __init__(self):
        self._store: dict[tuple[str, int], SolveResult] = {}

    def get(self, label: str, g, k: int) -> SolveResult:
        key = (label, k)
        if key not in self._store:
            self._store[key] = solve(g, k)
        return self._store[key]


@pytest.fixture(scope="session")
def solver_cache() -> SolverCache:
    return SolverCache()


@pytest.fixture(scope="session")
def acceptance():
    """Collector for the one-line-per-criterion acceptance report."""

    def log(line: str) -> None:
        _ACCEPTANCE_LINES.append(line)

    return log


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.line(line)
