"""Shared verdict type for property checkers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a yes/no property check.

    For existential verdicts the witness certifies the answer and can be
    re-validated in polynomial time (a clique vertex tuple, a separator
    set, an antipodal vertex pair, a coloring).  reason carries a short
    human-readable note for non-witnessed outcomes.
    """

    holds: bool
    witness: object = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds
