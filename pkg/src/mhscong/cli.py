"""Prime-sweep driver: runs selected checks over a prime range and emits
json/csv/text reports with meaningful exit codes.

Exit codes: 0 = every selected check passed or was unmet; 1 = at least
one check failed; 2 = configuration error.
"""

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import BudgetExceeded, ConfigError, UnknownCheckId
from .mhs import MhsTables
from .modring import Prime
from .results import CheckResult
from .verifiers import CHECK_IDS, check_oracle_agreement, run_suite, suite_table_depth

_FORMATS = ("json", "csv", "text")
ORACLE_MAX_P_LIMIT = 31
N_MAX_LIMIT = 64


@dataclass(frozen=True)
class SweepConfig:
    p_min: int = 5
    p_max: int = 1000
    n_max: int = 8
    checks: frozenset = frozenset(CHECK_IDS)
    oracle_max_p: int = 13  # 0 disables the oracle cross-check
    format: str = "text"
    workers: int = 1

    def validate(self) -> None:
        if not 3 <= self.p_min <= self.p_max:
            raise ConfigError(f"need 3 <= p_min <= p_max, got [{self.p_min}, {self.p_max}]")
        if not 1 <= self.n_max <= N_MAX_LIMIT:
            raise ConfigError(f"need 1 <= n_max <= {N_MAX_LIMIT}, got {self.n_max}")
        if not 0 <= self.oracle_max_p <= ORACLE_MAX_P_LIMIT:
            raise ConfigError(
                f"need 0 <= oracle_max_p <= {ORACLE_MAX_P_LIMIT}, got {self.oracle_max_p}")
        if self.format not in _FORMATS:
            raise ConfigError(f"format must be one of {', '.join(_FORMATS)}, got {self.format!r}")
        if self.workers < 1:
            raise ConfigError(f"workers must be positive, got {self.workers}")
        unknown = sorted(set(self.checks) - set(CHECK_IDS))
        if unknown:
            raise UnknownCheckId(f"unknown check id(s): {', '.join(unknown)}")
        if not self.checks:
            raise ConfigError("no checks selected")


@dataclass
class SweepReport:
    config: SweepConfig
    results: list  # CheckResult, sorted by (p, check_id, n)
    summary: dict  # {"passed": int, "failed": int, "unmet": int}
    timings: dict = field(default_factory=dict)  # p -> seconds; text output only


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes in [lo, hi] by a plain sieve."""
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(hi**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [q for q in range(max(lo, 2), hi + 1) if sieve[q]]


def _sweep_one(args: tuple) -> tuple[int, float, list[CheckResult]]:
    p, n_max, checks, oracle_max_p = args
    start = time.perf_counter()
    ctx = Prime(p)
    depth = suite_table_depth(checks, n_max, p)
    if p <= oracle_max_p:
        depth = max(depth, min(n_max, p - 2))
    tables = MhsTables(ctx, depth) if depth >= 1 else None
    results = run_suite(ctx, n_max, checks, tables=tables)
    if p <= oracle_max_p:
        for n in range(1, min(n_max, p - 2) + 1):
            try:
                results.append(check_oracle_agreement(ctx, n, tables=tables))
            except BudgetExceeded:
                results.append(CheckResult("oracle", p, n, passed=False, unmet=True))
    results.sort(key=lambda r: (r.check_id, r.n))
    return p, time.perf_counter() - start, results


def run_sweep(cfg: SweepConfig) -> SweepReport:
    """Run the configured checks over every prime in [p_min, p_max].

    Deterministic: the report depends only on the mathematical part of
    the configuration, never on worker count or timing.
    """
    cfg.validate()
    checks = frozenset(cfg.checks)
    tasks = [(p, cfg.n_max, checks, cfg.oracle_max_p)
             for p in primes_in(cfg.p_min, cfg.p_max)]
    if cfg.workers == 1 or len(tasks) <= 1:
        per_prime = [_sweep_one(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            per_prime = list(pool.map(_sweep_one, tasks, chunksize=1))
    results: list[CheckResult] = []
    timings: dict[int, float] = {}
    for p, elapsed, rs in per_prime:
        timings[p] = elapsed
        results.extend(rs)
    results.sort(key=lambda r: (r.p, r.check_id, r.n))
    summary = {"passed": 0, "failed": 0, "unmet": 0}
    for r in results:
        summary[r.status] += 1
    return SweepReport(config=cfg, results=results, summary=summary, timings=timings)


def _config_echo(cfg: SweepConfig) -> dict:
    # workers and format are execution details: reports must be
    # byte-identical across worker counts, so they are not echoed.
    return {
        "p_min": cfg.p_min,
        "p_max": cfg.p_max,
        "n_max": cfg.n_max,
        "checks": sorted(cfg.checks),
        "oracle_max_p": cfg.oracle_max_p,
    }


def emit(report: SweepReport, format: str) -> str:
    """Render a report as json, csv, or a human text table."""
    if format == "json":
        obj = {
            "config": _config_echo(report.config),
            "results": [
                {"p": r.p, "check_id": r.check_id, "n": r.n,
                 "passed": r.passed, "unmet": r.unmet, "witness": r.witness}
                for r in report.results
            ],
            "summary": report.summary,
        }
        return json.dumps(obj, indent=2) + "\n"

    if format == "csv":
        lines = ["p,check_id,n,passed,witness"]
        for r in report.results:
            passed = "unmet" if r.unmet else ("true" if r.passed else "false")
            witness = "" if r.witness is None else str(r.witness)
            lines.append(f"{r.p},{r.check_id},{r.n},{passed},{witness}")
        return "\n".join(lines) + "\n"

    if format == "text":
        cfg = report.config
        head = (f"sweep p in [{cfg.p_min}, {cfg.p_max}]  n_max={cfg.n_max}  "
                f"checks={len(cfg.checks)}  oracle_max_p={cfg.oracle_max_p}")
        lines = [head, "", f"{'p':>8}  {'passed':>6}  {'failed':>6}  {'unmet':>6}  {'time':>9}"]
        by_p: dict[int, dict] = {}
        for r in report.results:
            tally = by_p.setdefault(r.p, {"passed": 0, "failed": 0, "unmet": 0})
            tally[r.status] += 1
        for p in sorted(by_p):
            t = by_p[p]
            secs = report.timings.get(p, 0.0)
            lines.append(f"{p:>8}  {t['passed']:>6}  {t['failed']:>6}  {t['unmet']:>6}  "
                         f"{secs:>8.3f}s")
        s = report.summary
        lines.append("")
        lines.append(f"totals  passed={s['passed']}  failed={s['failed']}  unmet={s['unmet']}")
        failed = [r for r in report.results if r.status == "failed"]
        if failed:
            lines.append("failed:")
            for r in failed:
                lines.append(f"  p={r.p} {r.check_id} n={r.n} witness={r.witness}")
        return "\n".join(lines) + "\n"

    raise ConfigError(f"format must be one of {', '.join(_FORMATS)}, got {format!r}")


def _parse_checks(text: str) -> frozenset:
    if text.strip() == "all":
        return frozenset(CHECK_IDS)
    parts = [c.strip() for c in text.split(",") if c.strip()]
    if not parts:
        raise ConfigError("empty --checks list")
    return frozenset(parts)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="mhscong",
        description="Verify nested-harmonic-sum congruences over a sweep of primes.")
    parser.add_argument("--pmin", type=int, default=5, help="lower end of the prime range")
    parser.add_argument("--pmax", type=int, default=1000, help="upper end of the prime range")
    parser.add_argument("--nmax", type=int, default=8, help="maximum sum depth n")
    parser.add_argument("--checks", default="all",
                        help="comma-separated check ids, or 'all' (default)")
    parser.add_argument("--format", choices=_FORMATS, default="text")
    parser.add_argument("--oracle-max-p", type=int, default=13, dest="oracle_max_p",
                        help="cross-check primes up to this bound against the exact "
                             "oracle (0 disables, max 31)")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out", default=None, help="write the report to FILE instead of stdout")
    args = parser.parse_args(argv)
    try:
        cfg = SweepConfig(p_min=args.pmin, p_max=args.pmax, n_max=args.nmax,
                          checks=_parse_checks(args.checks),
                          oracle_max_p=args.oracle_max_p,
                          format=args.format, workers=args.workers)
        cfg.validate()
        report = run_sweep(cfg)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    payload = emit(report, cfg.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 1 if report.summary["failed"] else 0


if __name__ == "__main__":
    sys.exit(main())
