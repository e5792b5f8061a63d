"""Exception types shared across the package.

The split mirrors the CLI exit-code contract: input problems (bad files,
unknown groups, enumeration budgets) are user-facing and map to exit code 2,
while axiom violations found in otherwise well-formed data map to exit code 1.
Engine bugs raise plain AssertionError and are never caught.
"""

from __future__ import annotations


class GarsideError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GarsideError):
    """Malformed `.gar` document or word syntax."""


class InhomogeneousPresentation(GarsideError):
    """A relation changes word length, so no length morphism exists."""

    def __init__(self, indices: list[int]) -> None:
        self.indices = indices
        super().__init__(f"relations at indices {indices} are not length-preserving")


class BudgetExceeded(GarsideError):
    """An enumeration stratum is larger than the configured word budget."""

    def __init__(self, length: int, count: int, budget: int) -> None:
        self.length = length
        self.count = count
        self.budget = budget
        super().__init__(
            f"stratum of length {length} has {count} words, over the budget of {budget}"
        )


class AxiomViolation(GarsideError):
    """A Garside axiom failed on the input presentation.

    `kind` is one of "balanced", "lattice", "phi"; `witnesses` is a list of
    human-readable strings pinpointing the failure.
    """

    def __init__(self, kind: str, witnesses: list[str]) -> None:
        self.kind = kind
        self.witnesses = witnesses
        super().__init__(f"{kind} axiom failed: {'; '.join(witnesses[:3])}")


class PeriodicityError(GarsideError):
    """A root/periodicity precondition failed; the message is the witness identity."""


class UnknownGroup(GarsideError):
    """Group name not in the exceptional table and not valid series parameters."""


class NonComposablePath(GarsideError):
    """A morphism path whose consecutive endpoints do not match."""
