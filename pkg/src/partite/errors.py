"""Error taxonomy shared across the package.

Every failure mode that callers (and the command line front end) need to
distinguish gets its own exception class.  The CLI maps these onto exit
codes, so the split must stay stable:

* ``InvalidArgument``     -- the input value itself is malformed,
* ``PreconditionViolation`` -- the value is well formed but the operation's
  mathematical precondition (linearity, subhypergraph containment, ...)
  does not hold,
* ``BudgetExceeded``      -- an exhaustive search ran out of its budget,
* ``ParseError``          -- a document could not be decoded.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class PartiteError(Exception):
    """Base class for all package-specific errors."""


class InvalidArgument(PartiteError, ValueError):
    """A supplied value is malformed (wrong shape, wrong range, ...)."""


class PreconditionViolation(PartiteError, ValueError):
    """A structural precondition of the requested operation fails."""


class ParseError(PartiteError, ValueError):
    """A document is syntactically or semantically unreadable."""


class BudgetExceeded(PartiteError, RuntimeError):
    """An exhaustive search exceeded its resource budget.

    The exception records how far the search got so that callers can
    report progress or retry with a larger budget.
    """

    def __init__(self, message: str, *, spent: int | None = None,
                 budget: int | None = None):
        super().__init__(message)
        self.spent = spent
        self.budget = budget


@dataclass(frozen=True)
class Budget:
    """Machine-readable resource limits for the exhaustive searches.

    ``nodes`` bounds the number of explored partial colourings (the unit
    used by the arrowing oracle), ``vertices`` bounds the size of
    constructed hypergraphs, and ``exponent`` bounds power-construction
    searches.  ``None`` means unlimited.
    """

    nodes: int | None = 1 << 24
    vertices: int | None = None
    exponent: int | None = 12

    def check_nodes(self, spent: int) -> None:
        if self.nodes is not None and spent > self.nodes:
            raise BudgetExceeded(
                f"search budget exhausted after {spent} explored states",
                spent=spent, budget=self.nodes)

    def check_vertices(self, count: int, what: str = "hypergraph") -> None:
        if self.vertices is not None and count > self.vertices:
            raise BudgetExceeded(
                f"{what} would have {count} vertices, over the budget "
                f"of {self.vertices}", spent=count, budget=self.vertices)
