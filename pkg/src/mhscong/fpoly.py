"""Dense polynomials over Z/p.

Coefficient lists may carry trailing zeros; equality trims them. Every
polynomial handled here has degree below p.
"""

from .errors import RangeError
from .mhs import MhsTables
from .modring import Prime, inv_sq


class FpPoly:
    """Coefficients over Z/p, index = power of x."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: Prime, coeffs) -> None:
        p = ctx.p
        self.ctx = ctx
        self.coeffs = [c % p for c in coeffs]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.ctx.p == other.ctx.p and _trim(self.coeffs) == _trim(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.ctx.p, tuple(_trim(self.coeffs))))

    def __repr__(self) -> str:
        return f"FpPoly(p={self.ctx.p}, coeffs={self.coeffs})"


def _trim(cs: list[int]) -> list[int]:
    d = len(cs)
    while d and cs[d - 1] == 0:
        d -= 1
    return cs[:d]


def build_fn(tables: MhsTables, n: int) -> FpPoly:
    """Generating polynomial of the depth-n sums keyed by first index.

    Coefficient of x^m is inv(m) * g[n-1][m]: the sum of 1/(i1*...*in)
    over tuples with i1 = m. Constant term is 0.
    """
    if not 1 <= n <= tables.n_max:
        raise RangeError(f"n must be in [1, {tables.n_max}], got {n}")
    ctx = tables.ctx
    p = ctx.p
    inv = ctx.inv_table
    row = tables.g[n - 1]
    coeffs = [0] * p
    for m in range(1, p):
        coeffs[m] = inv[m] * row[m] % p
    return FpPoly(ctx, coeffs)


def formal_derivative(f: FpPoly) -> FpPoly:
    """Coefficient rule (sum a_i x^i)' = sum i*a_i x^{i-1} mod p."""
    p = f.ctx.p
    return FpPoly(f.ctx, [i * c % p for i, c in enumerate(f.coeffs)][1:])


def subst_one_minus_x(f: FpPoly) -> FpPoly:
    """The polynomial g with g(x) = f(1-x), via the binomial transform.

    g_k = (-1)^k * sum_{i>=k} f_i * C(i,k). A Pascal row is carried along
    the i-sweep, so the whole transform is O(d^2) with O(d) memory. The
    accumulator delays reduction: entries stay below p^3 across the sweep.
    """
    p = f.ctx.p
    cs = f.coeffs
    if not cs:
        return FpPoly(f.ctx, [])
    d = len(cs) - 1
    g = [0] * (d + 1)
    row = [0] * (d + 1)  # row[k] = C(i, k) for the current i
    row[0] = 1
    for i in range(d + 1):
        if i:
            for k in range(i, 0, -1):
                row[k] = (row[k] + row[k - 1]) % p
        fi = cs[i]
        if fi:
            for k in range(i + 1):
                g[k] += fi * row[k]
    for k in range(d + 1):
        v = g[k] % p
        g[k] = (p - v) % p if k & 1 else v
    return FpPoly(f.ctx, g)


def eval_at(f: FpPoly, a: int) -> int:
    """Horner evaluation of f at the residue a."""
    p = f.ctx.p
    a %= p
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * a + c) % p
    return acc


def f1_closed_form(ctx: Prime) -> FpPoly:
    """Coefficients of (1 - x^p - (1-x)^p) / p reduced mod p.

    Coefficient of x^i is (-1)^{i-1} * C(p,i)/p. The binomial column is
    carried mod p^2, which pins C(p,i)/p mod p exactly since p | C(p,i).
    Independent of the suffix tables.
    """
    p = ctx.p
    psq = p * p
    coeffs = [0] * p
    b = p  # C(p, 1) mod p^2
    for i in range(1, p):
        t = b // p
        coeffs[i] = t if i & 1 else (p - t) % p
        if i < p - 1:
            b = b * (p - i) % psq * inv_sq(i + 1, ctx) % psq
    return FpPoly(ctx, coeffs)
