"""Verification of nested (multiple) harmonic sum congruences modulo primes.

Fast mod-p paths (suffix tables, class sums, generating polynomials, the
cube-root extension ring) paired with an exact big-rational oracle, a set
of named congruence checks, and a prime-sweep CLI.
"""

from .errors import (
    BudgetExceeded,
    CompositeModulus,
    ConfigError,
    DenominatorDivisible,
    HypothesisUnmet,
    RangeError,
    TooSmall,
    UnknownCheckId,
    ZeroDivisor,
)
from .modring import (
    OmegaElem,
    Prime,
    batch_invert,
    chi3,
    inv_sq,
    is_prime_u64,
    make_prime,
    omega_add,
    omega_mul,
    omega_neg,
    omega_scalar,
)
from .mhs import ClassSums, MhsTables, build_tables, class_sums, full_mhs, weighted_first_index_sum
from .fpoly import FpPoly, build_fn, eval_at, f1_closed_form, formal_derivative, subst_one_minus_x
from .oracle import exact_nested_sum, exact_poly_fn, exact_suffix_sum, reduce_mod
from .results import CheckResult
from .gallery import check_sun_halves, check_sun_tauraso, check_wolstenholme
from .verifiers import (
    CHECK_IDS,
    check_deriv_identity,
    check_eq_1_1,
    check_eq_1_2,
    check_eq_2_1,
    check_eq_2_5,
    check_f1_closed,
    check_oracle_agreement,
    check_thm_1_1_even,
    check_thm_1_1_odd,
    check_thm_1_2,
    run_suite,
)
from .cli import SweepConfig, SweepReport, emit, primes_in, run_sweep

__version__ = "0.1.0"
