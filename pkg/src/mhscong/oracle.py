"""Exact big-rational brute force for small primes.

Enumerates the strictly increasing index tuples behind every nested
harmonic sum and keeps values as exact Fractions, so every fast mod-p
path in the package can be diffed against ground truth. Budget-capped:
meant for p up to ~31.
"""

from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Callable, Optional

from .errors import BudgetExceeded, DenominatorDivisible
from .modring import Prime

ENUM_BUDGET = 10**6

Weight = Callable[[int], int]


def _check_budget(count: int) -> None:
    if count > ENUM_BUDGET:
        raise BudgetExceeded(f"{count} tuples exceed the enumeration budget {ENUM_BUDGET}")


def exact_nested_sum(p: int, n: int, weight: Optional[Weight] = None) -> Fraction:
    """Sum of w(i1)/(i1*...*in) over 0 < i1 < ... < in < p, exactly.

    weight=None means w == 1.
    """
    _check_budget(comb(p - 1, n))
    total = Fraction(0)
    for t in combinations(range(1, p), n):
        w = 1 if weight is None else weight(t[0])
        if w:
            total += Fraction(w, prod(t))
    return total


def exact_suffix_sum(p: int, j: int, m: int) -> Fraction:
    """Sum of 1/(i1*...*ij) over m < i1 < ... < ij < p, exactly."""
    _check_budget(comb(max(p - 1 - m, 0), j))
    total = Fraction(0)
    for t in combinations(range(m + 1, p), j):
        total += Fraction(1, prod(t))
    return total


def exact_poly_fn(p: int, n: int) -> list[Fraction]:
    """Exact coefficients of sum x^{i1}/(i1*...*in); entry m collects tuples with i1 = m."""
    _check_budget(comb(p - 1, n))
    coeffs = [Fraction(0)] * p
    for t in combinations(range(1, p), n):
        coeffs[t[0]] += Fraction(1, prod(t))
    return coeffs


def reduce_mod(s: Fraction, ctx: Prime) -> int:
    """Reduce an exact rational mod p; the denominator must be coprime to p."""
    p = ctx.p
    d = s.denominator % p
    if d == 0:
        raise DenominatorDivisible(f"denominator of {s} is divisible by {p}")
    return s.numerator % p * ctx.inv_table[d] % p
