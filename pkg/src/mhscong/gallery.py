"""Verifiers for three classical mod p and mod p^2 congruences.

These exercise the mod-p^2 arithmetic: the vanishing inverse sum, the
halved-range powers-of-3 sum, and the central-binomial sum keyed to the
quadratic character mod 3.
"""

from .errors import BudgetExceeded, HypothesisUnmet, RangeError
from .modring import Prime, chi3, inv_sq
from .results import CheckResult

CENTRAL_BUDGET = 10**5


def check_wolstenholme(ctx: Prime) -> CheckResult:
    """1 + 1/2 + ... + 1/(p-1) vanishes mod p^2, for p > 3."""
    p = ctx.p
    if p <= 3:
        raise HypothesisUnmet(f"requires p > 3, got {p}")
    psq = p * p
    total = 0
    for k in range(1, p):
        total += inv_sq(k, ctx)
    total %= psq
    return CheckResult("gallery-a", p, 0, passed=total == 0,
                       witness=None if total == 0 else total)


def check_sun_halves(ctx: Prime) -> CheckResult:
    """sum_{0<k<p/2} 3^k/k = sum_{0<k<p/6} (-1)^k/k (mod p), for p > 3."""
    p = ctx.p
    if p <= 3:
        raise HypothesisUnmet(f"requires p > 3, got {p}")
    inv = ctx.inv_table
    lhs = 0
    pw = 1
    for k in range(1, (p - 1) // 2 + 1):
        pw = pw * 3 % p
        lhs = (lhs + pw * inv[k]) % p
    rhs = 0
    for k in range(1, (p - 1) // 6 + 1):
        rhs = rhs - inv[k] if k & 1 else rhs + inv[k]
    diff = (lhs - rhs) % p
    return CheckResult("gallery-b", p, 0, passed=diff == 0,
                       witness=None if diff == 0 else diff)


def check_sun_tauraso(ctx: Prime, a: int = 1) -> CheckResult:
    """sum_{k=0}^{p^a-1} C(2k,k) = chi3(p^a) (mod p^2).

    Central binomials are kept as exact integers and a copy is reduced
    mod p^2 each step: the C(2k,k) -> C(2k+2,k+1) update divides by k+1,
    which hits multiples of p, so modular division is not an option.
    """
    p = ctx.p
    if a < 1:
        raise RangeError(f"exponent must be positive, got {a}")
    count = p**a
    if count > CENTRAL_BUDGET:
        raise BudgetExceeded(f"p^a = {count} exceeds the budget {CENTRAL_BUDGET}")
    psq = p * p
    total = 0
    c = 1
    for k in range(count):
        total = (total + c) % psq
        c = c * (4 * k + 2) // (k + 1)
    diff = (total - chi3(count)) % psq
    return CheckResult("gallery-d", p, 0, passed=diff == 0,
                       witness=None if diff == 0 else diff)
