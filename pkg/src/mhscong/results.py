"""Structured pass/fail outcome of a single congruence check."""

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check at one (p, n).

    n is 0 when the check has no depth parameter. A passing check carries
    no witness; a failing one records the first offending quantity (a
    residue, or a coefficient/point index for polynomial checks). unmet
    marks a check invoked outside its hypothesis: reported, never counted
    as a failure.
    """

    check_id: str
    p: int
    n: int = 0
    passed: bool = False
    witness: Optional[int] = None
    unmet: bool = False

    @property
    def status(self) -> str:
        if self.unmet:
            return "unmet"
        return "passed" if self.passed else "failed"
