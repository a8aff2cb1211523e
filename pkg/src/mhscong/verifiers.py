"""One named check per congruence, each returning a structured result.

Check ids (stable vocabulary, also the CLI's --checks values):

    eq1.1          triple sum of chi3(i1)(-1)^{i1}/(i1 i2 i3) vanishes mod p
    eq1.2          triple sums over first-index classes {1,2} and {4,5} mod 6 agree
    thm1.1-odd     odd depth: S1 + S2 = S4 + S5 (mod p)
    thm1.1-even    even depth: the (-1)^{i1} sum over 3 | i1 equals
                   2(S2 + S3 + S4), plus the equivalent linear forms
    thm1.2         reflection: F(1-x) = (-1)^{n-1} F(x) coefficient-wise
    eq2.1          the same reflection specialized to the cube-root point,
                   checked against the class-sum decomposition
    eq2.5          the complete depth-n sum vanishes mod p, cross-checked
                   via elementary symmetric functions of the inverses
    f1-closed      depth-1 polynomial equals (1 - x^p - (1-x)^p)/p mod p
    deriv-identity x(x-1) F_n'(x) = F_{n-1}(x) - x * (depth n-1 full sum)
    gallery-a/b/d  the mod p^2 examples (see gallery module)

S_r is the depth-n sum restricted to first index r mod 6. Direct calls
raise HypothesisUnmet (or RangeError) outside a check's hypothesis;
run_suite reports such combinations as unmet instead.
"""

from typing import Callable, NamedTuple, Optional

from .errors import BudgetExceeded, HypothesisUnmet, RangeError, UnknownCheckId
from .fpoly import FpPoly, build_fn, eval_at, f1_closed_form, formal_derivative, subst_one_minus_x
from .gallery import check_sun_halves, check_sun_tauraso, check_wolstenholme
from .mhs import MhsTables, class_sums, full_mhs, weighted_first_index_sum
from .modring import OmegaElem, Prime, chi3, omega_add, omega_mul, omega_neg, omega_scalar
from . import oracle
from .results import CheckResult

# Pointwise evaluation cross-checks the binomial transform up to this p.
THM12_CROSS_CHECK_MAX = 101

CHECK_IDS = (
    "deriv-identity",
    "eq1.1",
    "eq1.2",
    "eq2.1",
    "eq2.5",
    "f1-closed",
    "gallery-a",
    "gallery-b",
    "gallery-d",
    "thm1.1-even",
    "thm1.1-odd",
    "thm1.2",
)


def _ensure_tables(ctx: Prime, depth: int, tables: Optional[MhsTables]) -> MhsTables:
    return tables if tables is not None else MhsTables(ctx, depth)


def _scalar_result(check_id: str, p: int, n: int, value: int) -> CheckResult:
    return CheckResult(check_id, p, n, passed=value == 0,
                       witness=None if value == 0 else value)


def _chi_alt(i: int) -> int:
    # chi3(i) * (-1)^i
    return -chi3(i) if i & 1 else chi3(i)


def _alt_on_multiples_of_3(i: int) -> int:
    # (-1)^i on 3 | i, else 0
    if i % 3:
        return 0
    return -1 if i & 1 else 1


def check_eq_1_1(ctx: Prime, tables: Optional[MhsTables] = None) -> CheckResult:
    """chi3-alternating triple sum vanishes mod p (first index weighted)."""
    if ctx.p < 5:
        raise HypothesisUnmet(f"requires p >= 5, got {ctx.p}")
    tables = _ensure_tables(ctx, 3, tables)
    val = weighted_first_index_sum(tables, 3, _chi_alt)
    return _scalar_result("eq1.1", ctx.p, 3, val)


def check_eq_1_2(ctx: Prime, tables: Optional[MhsTables] = None) -> CheckResult:
    """Two-sided form of eq1.1, computed independently through class sums."""
    if ctx.p < 5:
        raise HypothesisUnmet(f"requires p >= 5, got {ctx.p}")
    tables = _ensure_tables(ctx, 3, tables)
    s = class_sums(tables, 3).s
    diff = (s[1] + s[2] - s[4] - s[5]) % ctx.p
    return _scalar_result("eq1.2", ctx.p, 3, diff)


def check_thm_1_1_odd(ctx: Prime, n: int, tables: Optional[MhsTables] = None) -> CheckResult:
    """Odd depth: S1 + S2 = S4 + S5 (mod p)."""
    if n < 1 or n % 2 == 0:
        raise RangeError(f"n must be a positive odd integer, got {n}")
    if ctx.p <= n + 1:
        raise HypothesisUnmet(f"requires p > {n + 1}, got p={ctx.p}")
    tables = _ensure_tables(ctx, n, tables)
    s = class_sums(tables, n).s
    diff = (s[1] + s[2] - s[4] - s[5]) % ctx.p
    return _scalar_result("thm1.1-odd", ctx.p, n, diff)


def check_thm_1_1_even(ctx: Prime, n: int, tables: Optional[MhsTables] = None) -> CheckResult:
    """Even depth: the alternating sum over 3 | i1 equals 2(S2 + S3 + S4).

    Verifies the congruence in its stated form (left side through an
    independent weighted pass), the two equivalent linear forms in S_r,
    and the algebraic identity tying them together.
    """
    if n < 2 or n % 2:
        raise RangeError(f"n must be a positive even integer, got {n}")
    p = ctx.p
    if p <= n + 1:
        raise HypothesisUnmet(f"requires p > {n + 1}, got p={p}")
    tables = _ensure_tables(ctx, n, tables)
    s = class_sums(tables, n).s
    lhs = weighted_first_index_sum(tables, n, _alt_on_multiples_of_3)
    rhs = 2 * (s[2] + s[3] + s[4]) % p
    stated = (lhs - rhs) % p
    form_a = (2 * s[0] + s[1] - s[2] - 2 * s[3] - s[4] + s[5]) % p
    form_b = (s[0] - s[3] - rhs) % p
    # form_a - form_b = sum of all S_r, identically
    guard = (form_a - form_b - sum(s)) % p
    for val in (stated, form_a, form_b, guard):
        if val:
            return CheckResult("thm1.1-even", p, n, passed=False, witness=val)
    return CheckResult("thm1.1-even", p, n, passed=True)


def thm12_verdict_transform(f: FpPoly, n: int) -> tuple[bool, Optional[int]]:
    """Reflection check by coefficient transform; witness = first bad index."""
    p = f.ctx.p
    g = subst_one_minus_x(f).coeffs
    cs = f.coeffs
    flip = n % 2 == 0
    for k in range(len(cs)):
        want = (p - cs[k]) % p if flip else cs[k]
        if g[k] != want:
            return False, k
    return True, None


def thm12_verdict_pointwise(f: FpPoly, n: int) -> tuple[bool, Optional[int]]:
    """Reflection check by evaluation at every point; witness = first bad point.

    Valid because both sides have degree below p, so agreement at all p
    points is equivalent to coefficient-wise agreement.
    """
    p = f.ctx.p
    flip = n % 2 == 0
    for a in range(p):
        left = eval_at(f, 1 - a)
        right = eval_at(f, a)
        if flip:
            right = (p - right) % p
        if left != right:
            return False, a
    return True, None


def check_thm_1_2(ctx: Prime, n: int, tables: Optional[MhsTables] = None,
                  method: str = "auto") -> CheckResult:
    """F(1-x) = (-1)^{n-1} F(x) coefficient-wise mod p.

    method: "transform", "pointwise", or "auto" (transform, with a
    pointwise cross-check for p <= THM12_CROSS_CHECK_MAX).
    """
    if n < 1:
        raise RangeError(f"n must be positive, got {n}")
    p = ctx.p
    if p <= n + 1:
        raise HypothesisUnmet(f"requires p > {n + 1}, got p={p}")
    tables = _ensure_tables(ctx, n, tables)
    f = build_fn(tables, n)
    if method == "transform":
        ok, wit = thm12_verdict_transform(f, n)
    elif method == "pointwise":
        ok, wit = thm12_verdict_pointwise(f, n)
    elif method == "auto":
        ok, wit = thm12_verdict_transform(f, n)
        if p <= THM12_CROSS_CHECK_MAX:
            ok2, wit2 = thm12_verdict_pointwise(f, n)
            if ok2 != ok:
                # two independent algorithms disagree: report as a failure
                ok, wit = False, wit if wit is not None else wit2
    else:
        raise ValueError(f"unknown method {method!r}")
    return CheckResult("thm1.2", p, n, passed=ok, witness=wit)


def _omega_eval(f: FpPoly, x: OmegaElem, ctx: Prime) -> OmegaElem:
    acc = OmegaElem(0, 0)
    for c in reversed(f.coeffs):
        acc = omega_add(omega_mul(acc, x, ctx), OmegaElem(c, 0), ctx)
    return acc


def _omega_witness(got: OmegaElem, want: OmegaElem, ctx: Prime) -> int:
    diff = omega_add(got, omega_neg(want, ctx), ctx)
    return diff.a if diff.a else diff.b


def check_eq_2_1(ctx: Prime, n: int, tables: Optional[MhsTables] = None) -> CheckResult:
    """Reflection at the cube-root point, against the class-sum split.

    Evaluates F at -w and -w^2 by Horner in the extension ring and
    requires: F(-w^2) = (-1)^{n-1} F(-w); F(-w) + F(-w^2) equals the
    scalar 2S0+S1-S2-2S3-S4+S5; F(-w) - F(-w^2) = (w^2-w)(S1+S2-S4-S5).
    """
    if n < 1:
        raise RangeError(f"n must be positive, got {n}")
    p = ctx.p
    if p <= max(n + 1, 3):
        raise HypothesisUnmet(f"requires p > {max(n + 1, 3)}, got p={p}")
    tables = _ensure_tables(ctx, n, tables)
    f = build_fn(tables, n)
    at_mw = _omega_eval(f, OmegaElem(0, p - 1), ctx)      # -w
    at_mw2 = _omega_eval(f, OmegaElem(1, 1), ctx)         # -w^2 = 1 + w
    target = at_mw if n & 1 else omega_neg(at_mw, ctx)
    s = class_sums(tables, n).s
    even_form = (2 * s[0] + s[1] - s[2] - 2 * s[3] - s[4] + s[5]) % p
    odd_form = (s[1] + s[2] - s[4] - s[5]) % p
    pairs = (
        (at_mw2, target),
        (omega_add(at_mw, at_mw2, ctx), omega_scalar(even_form, ctx)),
        (omega_add(at_mw, omega_neg(at_mw2, ctx), ctx),
         omega_mul(OmegaElem(p - 1, p - 2), omega_scalar(odd_form, ctx), ctx)),
    )
    for got, want in pairs:
        if got != want:
            return CheckResult("eq2.1", p, n, passed=False,
                               witness=_omega_witness(got, want, ctx))
    return CheckResult("eq2.1", p, n, passed=True)


def _esym_of_inverses(ctx: Prime, n: int) -> int:
    """n-th elementary symmetric function of 1, 1/2, ..., 1/(p-1) mod p."""
    p = ctx.p
    inv = ctx.inv_table
    e = [1] + [0] * n
    for k in range(1, p):
        v = inv[k]
        for j in range(min(n, k), 0, -1):
            e[j] = (e[j] + e[j - 1] * v) % p
    return e[n]


def check_eq_2_5(ctx: Prime, n: int, tables: Optional[MhsTables] = None) -> CheckResult:
    """The complete depth-n sum vanishes mod p (p > n+1).

    Cross-checked against the elementary-symmetric route over the
    inverses 1..(p-1), which computes the same quantity by a Vieta sweep.
    """
    p = ctx.p
    if not 1 <= n <= p - 2:
        raise RangeError(f"n must be in [1, {p - 2}] for p={p}, got {n}")
    tables = _ensure_tables(ctx, n, tables)
    val = full_mhs(tables, n)
    esym = _esym_of_inverses(ctx, n)
    if val:
        return CheckResult("eq2.5", p, n, passed=False, witness=val)
    if esym != val:
        return CheckResult("eq2.5", p, n, passed=False, witness=esym)
    return CheckResult("eq2.5", p, n, passed=True)


def check_f1_closed(ctx: Prime, tables: Optional[MhsTables] = None) -> CheckResult:
    """Depth-1 polynomial equals (1 - x^p - (1-x)^p)/p coefficient-wise."""
    tables = _ensure_tables(ctx, 1, tables)
    got = build_fn(tables, 1).coeffs
    want = f1_closed_form(ctx).coeffs
    for k in range(ctx.p):
        if got[k] != want[k]:
            return CheckResult("f1-closed", ctx.p, 1, passed=False, witness=k)
    return CheckResult("f1-closed", ctx.p, 1, passed=True)


def check_deriv_identity(ctx: Prime, n: int, tables: Optional[MhsTables] = None) -> CheckResult:
    """x(x-1) F_n'(x) = F_{n-1}(x) - x * (full depth n-1 sum), exactly.

    An identity of polynomials over Z/p, verified coefficient-wise;
    witness = first differing coefficient index.
    """
    if n < 2:
        raise RangeError(f"n must be at least 2, got {n}")
    p = ctx.p
    if p <= n + 1:
        raise HypothesisUnmet(f"requires p > {n + 1}, got p={p}")
    tables = _ensure_tables(ctx, n, tables)
    d = formal_derivative(build_fn(tables, n)).coeffs
    length = len(d)
    lhs = [0] * (length + 2)
    for k in range(length):
        lhs[k + 2] = (lhs[k + 2] + d[k]) % p
        lhs[k + 1] = (lhs[k + 1] - d[k]) % p
    rhs = list(build_fn(tables, n - 1).coeffs)
    rhs[1] = (rhs[1] - full_mhs(tables, n - 1)) % p
    rhs += [0] * (len(lhs) - len(rhs))
    for k in range(len(lhs)):
        if lhs[k] != rhs[k]:
            return CheckResult("deriv-identity", p, n, passed=False, witness=k)
    return CheckResult("deriv-identity", p, n, passed=True)


def check_oracle_agreement(ctx: Prime, n: int, tables: Optional[MhsTables] = None) -> CheckResult:
    """Diff every fast-path depth-n quantity against the exact oracle.

    Covers the suffix row, the full and class-restricted sums, the two
    alternating weights, and the polynomial coefficients. Raises
    BudgetExceeded when the enumeration would be too large.
    """
    if n < 1:
        raise RangeError(f"n must be positive, got {n}")
    p = ctx.p
    tables = _ensure_tables(ctx, n, tables)
    cid = "oracle"

    got_full = full_mhs(tables, n)
    want_full = oracle.reduce_mod(oracle.exact_nested_sum(p, n), ctx)
    if got_full != want_full:
        return CheckResult(cid, p, n, passed=False, witness=got_full)

    row = tables.g[n]
    for m in range(p):
        want = oracle.reduce_mod(oracle.exact_suffix_sum(p, n, m), ctx)
        if row[m] != want:
            return CheckResult(cid, p, n, passed=False, witness=m)

    got_poly = build_fn(tables, n).coeffs
    want_poly = oracle.exact_poly_fn(p, n)
    for m in range(p):
        if got_poly[m] != oracle.reduce_mod(want_poly[m], ctx):
            return CheckResult(cid, p, n, passed=False, witness=m)

    if n <= p - 2:
        s = class_sums(tables, n).s
        for r in range(6):
            want = oracle.reduce_mod(
                oracle.exact_nested_sum(p, n, lambda i, r=r: 1 if i % 6 == r else 0), ctx)
            if s[r] != want:
                return CheckResult(cid, p, n, passed=False, witness=r)

    for weight in (lambda i: -1 if i & 1 else 1, _chi_alt):
        got = weighted_first_index_sum(tables, n, weight)
        want = oracle.reduce_mod(oracle.exact_nested_sum(p, n, weight), ctx)
        if got != want:
            return CheckResult(cid, p, n, passed=False, witness=got)

    return CheckResult(cid, p, n, passed=True)


class _CheckSpec(NamedTuple):
    n_values: Callable[[int], tuple[int, ...]]
    hypothesis: Callable[[int, int], bool]
    depth: Callable[[int], int]
    run: Callable[[Prime, Optional[MhsTables], int], CheckResult]


_CHECKS = {
    "deriv-identity": _CheckSpec(
        lambda nm: tuple(range(2, nm + 1)),
        lambda p, n: p > n + 1,
        lambda nm: nm,
        lambda ctx, t, n: check_deriv_identity(ctx, n, tables=t)),
    "eq1.1": _CheckSpec(
        lambda nm: (3,),
        lambda p, n: p >= 5,
        lambda nm: 3,
        lambda ctx, t, n: check_eq_1_1(ctx, tables=t)),
    "eq1.2": _CheckSpec(
        lambda nm: (3,),
        lambda p, n: p >= 5,
        lambda nm: 3,
        lambda ctx, t, n: check_eq_1_2(ctx, tables=t)),
    "eq2.1": _CheckSpec(
        lambda nm: tuple(range(1, nm + 1)),
        lambda p, n: p > max(n + 1, 3),
        lambda nm: nm,
        lambda ctx, t, n: check_eq_2_1(ctx, n, tables=t)),
    "eq2.5": _CheckSpec(
        lambda nm: tuple(range(1, nm + 1)),
        lambda p, n: n <= p - 2,
        lambda nm: nm,
        lambda ctx, t, n: check_eq_2_5(ctx, n, tables=t)),
    "f1-closed": _CheckSpec(
        lambda nm: (1,),
        lambda p, n: True,
        lambda nm: 1,
        lambda ctx, t, n: check_f1_closed(ctx, tables=t)),
    "gallery-a": _CheckSpec(
        lambda nm: (0,),
        lambda p, n: p > 3,
        lambda nm: 0,
        lambda ctx, t, n: check_wolstenholme(ctx)),
    "gallery-b": _CheckSpec(
        lambda nm: (0,),
        lambda p, n: p > 3,
        lambda nm: 0,
        lambda ctx, t, n: check_sun_halves(ctx)),
    "gallery-d": _CheckSpec(
        lambda nm: (0,),
        lambda p, n: True,
        lambda nm: 0,
        lambda ctx, t, n: check_sun_tauraso(ctx)),
    "thm1.1-even": _CheckSpec(
        lambda nm: tuple(range(2, nm + 1, 2)),
        lambda p, n: p > n + 1,
        lambda nm: nm,
        lambda ctx, t, n: check_thm_1_1_even(ctx, n, tables=t)),
    "thm1.1-odd": _CheckSpec(
        lambda nm: tuple(range(1, nm + 1, 2)),
        lambda p, n: p > n + 1,
        lambda nm: nm,
        lambda ctx, t, n: check_thm_1_1_odd(ctx, n, tables=t)),
    "thm1.2": _CheckSpec(
        lambda nm: tuple(range(1, nm + 1)),
        lambda p, n: p > n + 1,
        lambda nm: nm,
        lambda ctx, t, n: check_thm_1_2(ctx, n, tables=t)),
}


def suite_table_depth(selection, n_max: int, p: int) -> int:
    """Table depth run_suite needs for this selection (0: no tables)."""
    return min(max((_CHECKS[c].depth(n_max) for c in selection), default=0), p - 2)


def run_suite(ctx: Prime, n_max: int, selection=None,
              tables: Optional[MhsTables] = None) -> list[CheckResult]:
    """Run the selected checks for every applicable n up to n_max.

    Results come back in (check_id, n) order. Combinations outside a
    check's hypothesis (or over an enumeration budget) are reported with
    unmet=True. Fixed-n checks (eq1.1, eq1.2, f1-closed, gallery-*) run
    whenever selected, regardless of n_max.
    """
    if n_max < 1:
        raise RangeError(f"n_max must be positive, got {n_max}")
    if selection is None:
        ids = list(CHECK_IDS)
    else:
        ids = sorted(set(selection))
        unknown = [c for c in ids if c not in _CHECKS]
        if unknown:
            raise UnknownCheckId(f"unknown check id(s): {', '.join(unknown)}")
    p = ctx.p
    depth = suite_table_depth(ids, n_max, p)
    if tables is None and depth >= 1:
        tables = MhsTables(ctx, depth)
    out = []
    for cid in ids:
        spec = _CHECKS[cid]
        for n in spec.n_values(n_max):
            if not spec.hypothesis(p, n):
                out.append(CheckResult(cid, p, n, passed=False, unmet=True))
                continue
            try:
                out.append(spec.run(ctx, tables, n))
            except BudgetExceeded:
                out.append(CheckResult(cid, p, n, passed=False, unmet=True))
    return out
