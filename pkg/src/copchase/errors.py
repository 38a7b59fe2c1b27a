"""Exception hierarchy shared across the package.

Every error raised on bad input or a broken structural guarantee derives
from CopchaseError so callers (and the CLI) can distinguish domain
failures (exit code 2) from exhausted search budgets (exit code 3).
"""

from __future__ import annotations


class CopchaseError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CopchaseError):
    """Input violates a documented precondition or format."""


class ParseError(DomainError):
    """Edge-list text could not be parsed; message carries the line number."""


class ClassViolationError(DomainError):
    """A structural guarantee of the graph class failed to hold.

    Raised by validators when a component is neither a clique nor a
    2-clique, a mate is not unique, a hole profile has the wrong shape,
    and similar breaches.  On class members these never fire; on
    arbitrary graphs they double as the violation report.
    """


class BudgetExceededError(CopchaseError):
    """An exhaustive search ran past its configured node budget."""


class StrategyViolationError(CopchaseError):
    """The pursuit strategy reached a state its guarantees exclude.

    Firing on a class member indicates a bug; firing on a non-member
    (played with the membership check overridden) is expected and simply
    means the strategy's guarantees do not apply.
    """
