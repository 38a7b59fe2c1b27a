"""Pursuit games on claw-free, even-hole-free graphs.

The package bundles the structural toolkit (level decompositions, hole
profiles), a constructive two/three-cop pursuit strategy, an exact game
oracle, corpus generation, and a CLI plus a small JSON-over-HTTP play
service.
"""

from .errors import (
    BudgetExceededError,
    ClassViolationError,
    CopchaseError,
    DomainError,
    ParseError,
    StrategyViolationError,
)
from .families import (
    FAMILY_NAMES,
    FamilySpec,
    family,
    gen_random_member,
    make_family,
    standard_corpus,
)
from .graphs import (
    Graph,
    bfs_distances,
    connected_components,
    induced_subgraph,
    is_clique,
    parse_graph,
    serialize_graph,
)
from .holes import HoleProfile, TauRelation, dominated_c5_check, hole_profile, holes_in_arena, tau_relation
from .levels import Decomposition, LevelComponent, decompose, find_forbidden_path, iter_monotone_paths
from .oracle import SolveResult, cop_number, optimal_capture_time, solve
from .pursuit import PursuitGame, Transcript, path_cover_holds, simulate
from .recognition import (
    ClassReport,
    clique_substitution,
    enumerate_holes,
    find_claw,
    find_even_hole,
    is_member,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ClassReport",
    "ClassViolationError",
    "CopchaseError",
    "Decomposition",
    "DomainError",
    "FAMILY_NAMES",
    "FamilySpec",
    "Graph",
    "HoleProfile",
    "LevelComponent",
    "ParseError",
    "PursuitGame",
    "SolveResult",
    "StrategyViolationError",
    "TauRelation",
    "Transcript",
    "bfs_distances",
    "clique_substitution",
    "connected_components",
    "cop_number",
    "decompose",
    "dominated_c5_check",
    "enumerate_holes",
    "family",
    "find_claw",
    "find_even_hole",
    "find_forbidden_path",
    "gen_random_member",
    "hole_profile",
    "holes_in_arena",
    "induced_subgraph",
    "is_clique",
    "is_member",
    "iter_monotone_paths",
    "make_family",
    "optimal_capture_time",
    "parse_graph",
    "path_cover_holds",
    "serialize_graph",
    "simulate",
    "solve",
    "standard_corpus",
    "tau_relation",
]
