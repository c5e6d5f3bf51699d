"""Verification suites: every headline identity re-checked by exhaustive runs.

Each suite is a list of named checks; a check returns (ok, expected, actual)
and is timed individually.  Suites only source pure functions, so the runner
can dispatch them on a thread pool (``threads``), though the interpreter
serializes most of the work.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Optional

from .enumeration import (
    count,
    enum_dc,
    enum_labeled,
    enum_sdc,
    enum_te,
    enum_to,
    iter_sp,
    iter_te_rows,
    iter_to_rows,
)
from .grid import IntegrityError, is_symmetric
from .maps import even_expand, odd_expand, p_preimage, pi_forward, pi_preimage
from .polynomials import (
    D_poly,
    L_seq,
    P_poly,
    P_via_pistols,
    Poly,
    R_seq,
    c_triangle,
    cf_series,
    l_seq,
    r_seq,
)
from .stats import even_weight_stats, odd_weight_stats, path_report, poincare_poly

Check = tuple[str, Callable[[], tuple[bool, str, str]]]

DC_EXPECTED = (1, 2, 7, 38, 295, 3098)
SDC_EXPECTED = (1, 2, 3, 10, 21, 98, 267, 1594)
SP_EXPECTED = (1, 3, 17, 155, 2073, 38227)
POINCARE_EXPECTED = {
    "a": {1: (1,), 2: (1, 1), 3: (1, 2, 3, 1)},
    "sp": {1: (1,), 2: (1, 1), 3: (1, 1, 1), 4: (1, 2, 3, 3, 1)},
    "so": {1: (1,), 2: (2,), 3: (1, 2), 4: (2, 4, 4)},
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    expected: str
    actual: str
    seconds: float

    def to_json_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "expected": self.expected,
                "actual": self.actual, "seconds": round(self.seconds, 3)}


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    checks: tuple[CheckResult, ...]
    seconds: float

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json_dict(self) -> dict:
        return {"suite": self.suite, "ok": self.ok,
                "seconds": round(self.seconds, 3),
                "checks": [c.to_json_dict() for c in self.checks]}


# ---------------------------------------------------------------------------
# Exhaustive weighted sums.
# ---------------------------------------------------------------------------

def theorem1_sum(n: int) -> Poly:
    """Sum of 2^(fr-1-max) x^max over the n-column even family."""
    coeffs: list[int] = []
    for rows in iter_te_rows(n):
        f, mx = even_weight_stats(rows, n)
        e = f - 1 - mx
        if e < 0 or f > n:
            raise IntegrityError(f"weight bounds violated on {rows}")
        while len(coeffs) <= mx:
            coeffs.append(0)
        coeffs[mx] += 1 << e
    return Poly.of(coeffs)


def theorem2_sum(n: int) -> Poly:
    """Sum of 2^(fr-g) x^v (1+x)^g over the (n-1)-column odd family."""
    if n < 2:
        raise ValueError("n must be >= 2")
    acc: dict[tuple[int, int], int] = {}
    for rows in iter_to_rows(n - 1):
        f, v, g = odd_weight_stats(rows, n - 1)
        if f < v + g:
            raise IntegrityError(f"weight bounds violated on {rows}")
        acc[(v, g)] = acc.get((v, g), 0) + (1 << (f - g))
    x = Poly((0, 1))
    total = Poly(())
    for (v, g), c in sorted(acc.items()):
        total = total + (x ** v).scale(c) * (x + 1) ** g
    return total


def e_table(nmax: int) -> list[list[int]]:
    """e_{n,k} = sum over the n-column even tableaux with max = k of 2^(fr-1-k)."""
    out = []
    for n in range(1, nmax + 1):
        row = [0] * n
        for rows in iter_te_rows(n):
            f, mx = even_weight_stats(rows, n)
            row[mx] += 1 << (f - 1 - mx)
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# Suite definitions.
# ---------------------------------------------------------------------------

def _eq(expected, actual) -> tuple[bool, str, str]:
    return expected == actual, str(expected), str(actual)


def _sequences_checks(max_n: Optional[int]) -> list[Check]:
    cap = max_n or 8
    checks: list[Check] = []
    for N in range(1, min(6, cap) + 1):
        checks.append((f"counts.dc.N={N}",
                       lambda N=N: _eq(DC_EXPECTED[N - 1], count(enum_dc(N)))))
    for N in range(1, min(8, cap) + 1):
        checks.append((f"counts.sdc.N={N}",
                       lambda N=N: _eq(SDC_EXPECTED[N - 1], count(enum_sdc(N)))))
    for n in range(1, min(5, cap) + 1):
        checks.append((f"counts.te.n={n}",
                       lambda n=n: _eq(factorial(n + 1) * factorial(n) // 2 ** n,
                                       count(iter_te_rows(n)))))
        checks.append((f"counts.to.n={n}",
                       lambda n=n: _eq(factorial(n + 1) ** 2 // 2 ** n,
                                       count(iter_to_rows(n)))))
    for n in range(1, min(5, cap) + 1):
        checks.append((f"counts.sp.n={n}",
                       lambda n=n: _eq(SP_EXPECTED[n - 1], count(iter_sp(n)))))
    checks.append(("seq.L", lambda: _eq([1, 1, 4, 46, 1024], [L_seq(n) for n in range(5)])))
    checks.append(("seq.R", lambda: _eq([1, 3, 24, 402], [R_seq(n) for n in range(4)])))
    checks.append(("seq.l", lambda: _eq([1, 1, 3, 21, 267], [l_seq(n) for n in range(5)])))
    checks.append(("seq.r", lambda: _eq([1, 2, 10, 98, 1594], [r_seq(n) for n in range(5)])))
    checks.append(("seq.sdc_interleaves_l_r", lambda: _eq(
        [SDC_EXPECTED[N - 1] for N in range(1, 9)],
        [l_seq((N + 1) // 2) if N % 2 else r_seq(N // 2) for N in range(1, 9)])))
    for variety, table in POINCARE_EXPECTED.items():
        for N, coeffs in table.items():
            checks.append((f"poincare.{variety}.N={N}",
                           lambda variety=variety, N=N, coeffs=coeffs:
                           _eq(Poly.of(coeffs), poincare_poly(variety, N))))
    return checks


def _theorems_checks(max_n: Optional[int]) -> list[Check]:
    cap1 = max_n or 7
    cap2 = max_n or 6
    checks: list[Check] = []
    for n in range(1, min(7, cap1) + 1):
        checks.append((f"thm1.n={n}",
                       lambda n=n: _eq(P_poly(n), theorem1_sum(n))))
    for n in range(2, min(7, cap2) + 1):
        checks.append((f"thm2.n={n}",
                       lambda n=n: _eq(P_poly(n), theorem2_sum(n))))
    if cap2 == 6:
        # the default stops short of exhaustive n=7; still pin its input size
        checks.append(("thm2.count_only.to.n=6",
                       lambda: _eq(396900, count(iter_to_rows(6)))))
    e_cap = min(5, max_n or 5)
    checks.append(("e_table.equals_c_triangle",
                   lambda: _eq(c_triangle(e_cap), e_table(e_cap))))
    checks.append(("e_table.recurrences", lambda: _e_recurrence_check(e_cap)))
    return checks


def _e_recurrence_check(cap: int) -> tuple[bool, str, str]:
    e = e_table(cap)
    probs = []
    for n in range(2, cap + 1):
        prev, row = e[n - 2], e[n - 1]
        if row[0] != sum((1 << i) * prev[i] for i in range(n - 1)):
            probs.append(f"({n},0)")
        if row[n - 1] != n * prev[n - 2]:
            probs.append(f"({n},{n - 1})")
        for k in range(1, n - 1):
            want = (k + 1) * prev[k - 1] + sum(
                (1 << (i - k)) * (comb(i + 1, k) + 2 * comb(i + 1, k - 1)) * prev[i]
                for i in range(k, n - 1))
            if row[k] != want:
                probs.append(f"({n},{k})")
    return (not probs, "all recurrences hold", "failed at " + ", ".join(probs) if probs else "all recurrences hold")


def _fibers_checks(max_n: Optional[int]) -> list[Check]:
    cap = max_n or 5
    checks: list[Check] = []
    for n in range(2, min(5, cap) + 1):
        checks.append((f"pi.partition.n={n}", lambda n=n: _pi_partition_check(n)))
        checks.append((f"pi.fiber_sizes.n={n}", lambda n=n: _pi_sizes_check(n)))
        checks.append((f"p.partition.n={n}", lambda n=n: _p_partition_check(n)))
        checks.append((f"p.fiber_sizes.n={n}", lambda n=n: _p_sizes_check(n)))
    return checks


def _pi_partition_check(n: int) -> tuple[bool, str, str]:
    everything: list[tuple] = []
    for t0 in enum_te(n - 1):
        everything.extend(t.rows for t in pi_preimage(t0))
    expected = [t.rows for t in enum_te(n)]
    ok = len(everything) == len(set(everything)) and sorted(everything) == expected
    # forward consistency and the max identity
    if ok:
        for t in enum_te(n):
            rep = path_report(t)
            t0, _ = pi_forward(t)
            if path_report(t0).max != rep.max + rep.maxP - 2:
                return False, "max identity", f"fails at {t.rows}"
    return ok, f"{len(expected)} tableaux, each once", f"{len(everything)} preimages"


def _p_partition_check(n: int) -> tuple[bool, str, str]:
    everything: list[tuple] = []
    for t0 in enum_to(n - 1):
        everything.extend(t.rows for t in p_preimage(t0))
    expected = [t.rows for t in enum_te(n)]
    ok = len(everything) == len(set(everything)) and sorted(everything) == expected
    return ok, f"{len(expected)} tableaux, each once", f"{len(everything)} preimages"


def _pi_sizes_check(n: int) -> tuple[bool, str, str]:
    from itertools import combinations

    from .maps import pi_fiber_tagged
    from .stats import path_report as rep_of

    for t0 in enum_te(n - 1):
        i = rep_of(t0).max
        omax = sorted(rep_of(t0).omax_set())
        for k in range(i + 2):
            tally = {"s1": 0, "s2": 0, "s3-slash": 0, "s3-backslash": 0}
            for sub in combinations(omax, k):
                for tag, _t in pi_fiber_tagged(t0, frozenset(sub)):
                    tally[tag] += 1
            s1, s2 = tally["s1"], tally["s2"]
            s3 = tally["s3-slash"] + tally["s3-backslash"]
            if k == 0:
                good = (s1, s2, s3) == (1, 0, 0)
            elif k == i + 1:
                good = (s1, s3) == (0, 0) and s2 == i + 2
            else:
                good = (s1 == comb(i + 1, k) and s3 % 2 == 0
                        and s2 + s3 // 2 == comb(i + 1, k - 1))
            if not good:
                return False, "size formulas", f"fail at {t0.rows} k={k}: {tally}"
    return True, "size formulas", "size formulas"


def _p_sizes_check(n: int) -> tuple[bool, str, str]:
    from .maps import label_functions
    from .stats import path_report_odd

    for t0 in enum_to(n - 1):
        rep = path_report_odd(t0)
        want = 2 ** (rep.v - rep.g) * 3 ** rep.g
        got = sum(1 for _ in label_functions(t0, rep))
        if got != want:
            return False, "2^(v-g) 3^g each", f"fail at {t0.rows}: {got} != {want}"
    return True, "2^(v-g) 3^g each", "2^(v-g) 3^g each"


def _bijections_checks(max_n: Optional[int]) -> list[Check]:
    cap_e = max_n or 4
    cap_o = max_n or 3
    checks: list[Check] = []
    for n in range(1, min(4, cap_e) + 1):
        checks.append((f"expand.even.n={n}", lambda n=n: _expand_check(n, odd=False)))
    for n in range(1, min(3, cap_o) + 1):
        checks.append((f"expand.odd.n={n}", lambda n=n: _expand_check(n, odd=True)))
    for N in range(1, min(6, max_n or 6) + 1):
        checks.append((f"sdc.filtered.N={N}", lambda N=N: _eq(
            [t.rows for t in enum_sdc(N)],
            [t.rows for t in enum_dc(N) if is_symmetric(t)])))
    return checks


def _expand_check(n: int, odd: bool) -> tuple[bool, str, str]:
    source = enum_to(n) if odd else enum_te(n)
    expand = odd_expand if odd else even_expand
    N = 2 * n + 1 if odd else 2 * n
    images = []
    for t in source:
        for labels in enum_labeled(t):
            images.append(expand(t, labels).rows)
    target = [d.rows for d in enum_sdc(N)]
    ok = len(images) == len(set(images)) and sorted(images) == target
    return ok, f"bijection onto {len(target)} configurations", f"{len(images)} images"


def _pistols_checks(max_n: Optional[int]) -> list[Check]:
    cap = max_n or 6
    checks: list[Check] = []
    for n in range(1, min(6, cap) + 1):
        checks.append((f"pistols.n={n}",
                       lambda n=n: _eq(P_poly(n), P_via_pistols(n))))
    return checks


def _cf_checks(max_n: Optional[int]) -> list[Check]:
    order = min(7, max_n or 7)

    def check() -> tuple[bool, str, str]:
        series = cf_series(order)
        x = Poly((0, 1))
        expected = [Poly((1,))] + [x * P_poly(n) for n in range(1, order + 1)]
        return _eq(expected, series)

    return [(f"cf.series.order={order}", check)]


SUITES: dict[str, Callable[[Optional[int]], list[Check]]] = {
    "sequences": _sequences_checks,
    "theorems": _theorems_checks,
    "fibers": _fibers_checks,
    "bijections": _bijections_checks,
    "pistols": _pistols_checks,
    "cf": _cf_checks,
}


def run_suite(suite: str, max_n: Optional[int] = None, threads: int = 1) -> VerifyReport:
    """Run one suite (or ``all``) and collect per-check results."""
    if suite == "all":
        names = [s for s in SUITES]
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r} (expected one of "
                         f"{', '.join([*SUITES, 'all'])})")
    checks: list[Check] = []
    for name in names:
        checks.extend(SUITES[name](max_n))

    t0 = time.monotonic()

    def run_one(check: Check) -> CheckResult:
        name, fn = check
        start = time.monotonic()
        try:
            ok, expected, actual = fn()
        except Exception as exc:  # a crash is a failed check, not a crash of the runner
            ok, expected, actual = False, "no exception", f"{type(exc).__name__}: {exc}"
        return CheckResult(name, ok, expected, actual, time.monotonic() - start)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_one, checks))
    else:
        results = [run_one(c) for c in checks]
    return VerifyReport(suite, tuple(results), time.monotonic() - t0)
