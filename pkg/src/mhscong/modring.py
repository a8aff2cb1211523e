"""Arithmetic over Z/p, Z/p^2 and the cube-root-of-unity extension ring.

Residues are plain ints in [0, p); values mod p^2 are ints in [0, p^2).
A Prime carries the modulus together with a full inverse table so the rest
of the package can divide in O(1). Everything here is immutable after
construction and safe to share read-only between parallel workers.
"""

from dataclasses import dataclass

from .errors import CompositeModulus, TooSmall, ZeroDivisor

# Deterministic Miller-Rabin witness set, valid for every n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime_u64(n: int) -> bool:
    """Deterministic primality test for n below 2^64."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Prime:
    """Odd prime modulus with inv_table[k] = k^-1 mod p for 1 <= k < p.

    The table is filled at construction in O(p) via
    inv[k] = -(p // k) * inv[p % k] mod p.
    """

    __slots__ = ("p", "inv_table")

    def __init__(self, p: int) -> None:
        if p < 3:
            raise TooSmall(f"modulus must be at least 3, got {p}")
        if not is_prime_u64(p):
            raise CompositeModulus(f"{p} is not prime")
        inv = [0] * p
        inv[1] = 1
        for k in range(2, p):
            inv[k] = (p - p // k) * inv[p % k] % p
        self.p = p
        self.inv_table = inv

    def inv(self, k: int) -> int:
        """k^-1 mod p; k must not be a multiple of p."""
        r = k % self.p
        if r == 0:
            raise ZeroDivisor(f"{k} has no inverse mod {self.p}")
        return self.inv_table[r]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Prime) and other.p == self.p

    def __hash__(self) -> int:
        return hash(self.p)

    def __repr__(self) -> str:
        return f"Prime({self.p})"


def make_prime(p: int) -> Prime:
    """Certify primality of p >= 3 and build its inverse table."""
    return Prime(p)


def batch_invert(values: list[int], ctx: Prime) -> list[int]:
    """Invert a list of residues with one modular inversion.

    Prefix-product trick: 3(n-1) multiplications plus a single Fermat
    inversion, regardless of list length.
    """
    p = ctx.p
    n = len(values)
    if n == 0:
        return []
    reduced = [v % p for v in values]
    prefix = [0] * n
    acc = 1
    for i, v in enumerate(reduced):
        if v == 0:
            raise ZeroDivisor(f"value at index {i} is divisible by {p}")
        acc = acc * v % p
        prefix[i] = acc
    inv_acc = pow(acc, p - 2, p)
    out = [0] * n
    for i in range(n - 1, 0, -1):
        out[i] = inv_acc * prefix[i - 1] % p
        inv_acc = inv_acc * reduced[i] % p
    out[0] = inv_acc
    return out


_CHI3 = (0, 1, -1)


def chi3(i: int) -> int:
    """Quadratic character mod 3: +1 on 1 mod 3, -1 on 2 mod 3, 0 on multiples of 3."""
    return _CHI3[i % 3]


@dataclass(frozen=True)
class OmegaElem:
    """a + b*w where w is a primitive cube root of unity (w^2 = -1 - w)."""

    a: int
    b: int


def omega_add(x: OmegaElem, y: OmegaElem, ctx: Prime) -> OmegaElem:
    p = ctx.p
    return OmegaElem((x.a + y.a) % p, (x.b + y.b) % p)


def omega_neg(x: OmegaElem, ctx: Prime) -> OmegaElem:
    p = ctx.p
    return OmegaElem(-x.a % p, -x.b % p)


def omega_mul(x: OmegaElem, y: OmegaElem, ctx: Prime) -> OmegaElem:
    """(a1 + b1 w)(a2 + b2 w) reduced by w^2 = -1 - w."""
    p = ctx.p
    bb = x.b * y.b
    return OmegaElem((x.a * y.a - bb) % p, (x.a * y.b + x.b * y.a - bb) % p)


def omega_scalar(c: int, ctx: Prime) -> OmegaElem:
    """Embed a residue into the extension ring."""
    return OmegaElem(c % ctx.p, 0)


def inv_sq(k: int, ctx: Prime) -> int:
    """k^-1 mod p^2, by one Newton lift of the mod-p inverse."""
    p = ctx.p
    psq = p * p
    k %= psq
    if k % p == 0:
        raise ZeroDivisor(f"{k} has no inverse mod {p}^2")
    x = ctx.inv_table[k % p]
    return x * (2 - k * x) % psq
