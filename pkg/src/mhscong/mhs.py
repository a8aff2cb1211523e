"""Suffix-table engine for nested harmonic sums mod p.

Row j of the table holds g[j][m] = sum of 1/(i1*...*ij) over
m < i1 < ... < ij < p (empty product: g[0][m] = 1). Conditioning on the
smallest index gives the right-to-left recurrence

    g[j][m] = g[j][m+1] + inv(m+1) * g[j-1][m+1],    g[j][p-1] = 0,

so a full build is O(n_max * p). Because every quantity of interest
constrains only the FIRST index of a tuple, any weighting of i1 is then a
single O(p) pass over row n-1.
"""

from dataclasses import dataclass

from .errors import RangeError
from .modring import Prime


class MhsTables:
    """Suffix-sum rows 0..n_max; immutable after build."""

    __slots__ = ("ctx", "n_max", "g")

    def __init__(self, ctx: Prime, n_max: int, allow_edge: bool = False) -> None:
        p = ctx.p
        limit = p - 1 if allow_edge else p - 2
        if not 1 <= n_max <= limit:
            raise RangeError(f"n_max must be in [1, {limit}] for p={p}, got {n_max}")
        inv = ctx.inv_table
        rows = [[1] * p]
        for j in range(1, n_max + 1):
            prev = rows[j - 1]
            row = [0] * p
            for m in range(p - 2, -1, -1):
                row[m] = (row[m + 1] + inv[m + 1] * prev[m + 1]) % p
            rows.append(row)
        self.ctx = ctx
        self.n_max = n_max
        self.g = rows

    def __repr__(self) -> str:
        return f"MhsTables(p={self.ctx.p}, n_max={self.n_max})"


def build_tables(ctx: Prime, n_max: int, allow_edge: bool = False) -> MhsTables:
    """Build suffix tables up to depth n_max (n_max <= p-2 unless allow_edge)."""
    return MhsTables(ctx, n_max, allow_edge=allow_edge)


def full_mhs(tables: MhsTables, n: int) -> int:
    """The complete depth-n sum: 1/(i1*...*in) over 0 < i1 < ... < in < p, mod p."""
    if not 1 <= n <= tables.n_max:
        raise RangeError(f"n must be in [1, {tables.n_max}], got {n}")
    return tables.g[n][0]


@dataclass(frozen=True)
class ClassSums:
    """Depth-n sums split by the residue class of the first index mod 6."""

    ctx: Prime
    n: int
    s: tuple[int, int, int, int, int, int]


def class_sums(tables: MhsTables, n: int) -> ClassSums:
    """S[r] = depth-n sum restricted to first index i1 = r (mod 6)."""
    p = tables.ctx.p
    if not 1 <= n <= min(tables.n_max, p - 2):
        raise RangeError(f"n must be in [1, {min(tables.n_max, p - 2)}], got {n}")
    inv = tables.ctx.inv_table
    row = tables.g[n - 1]
    s = [0] * 6
    for i in range(1, p):
        r = i % 6
        s[r] = (s[r] + inv[i] * row[i]) % p
    return ClassSums(tables.ctx, n, tuple(s))


def weighted_first_index_sum(tables: MhsTables, n: int, weight) -> int:
    """Sum of w(i1)/(i1*...*in) over 0 < i1 < ... < in < p, mod p.

    weight is a pure function from the first index to an int (may be
    negative and need not be reduced).
    """
    p = tables.ctx.p
    if not 1 <= n <= tables.n_max:
        raise RangeError(f"n must be in [1, {tables.n_max}], got {n}")
    inv = tables.ctx.inv_table
    row = tables.g[n - 1]
    total = 0
    for i in range(1, p):
        w = weight(i)
        if w:
            total += w * inv[i] * row[i]
    return total % p
