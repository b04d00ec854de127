"""Fibonacci, Lucas and Chebyshev sequences, plus the identity suite that
cross-checks their product-to-sum relations.

Chebyshev polynomials of the second kind S_n satisfy S_{-1} = 0, S_0 = 1
and S_n = z*S_{n-1} - S_{n-2}; running the recurrence backwards extends
them to negative indices (S_{-n-2} = -S_n).  First-kind polynomials use
T_0 = 2, T_1 = z (forced by the closed form T_n = p^n + p^{-n}; see the
product identity T_m*T_n = T_{m+n} + T_{m-n} at m = n = 0) and T_{-n} = T_n.
Symbolic values reuse LaurentPoly with the variable read as z; the
substituted variants evaluate at z = 1 - t - t^{-1}.

Caches grow by atomic rebinding of module-level tuples, so concurrent
callers only ever see fully built prefixes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .ring import LaurentPoly

Z_VAR = LaurentPoly.t()  # the Chebyshev variable; print with to_str("z")
Z_OF_T = LaurentPoly({0: 1, 1: -1, -1: -1})  # 1 - t - t^-1

_fib_cache: tuple[int, ...] = (0, 1)
_cheb_s_cache: tuple[LaurentPoly, ...] = (LaurentPoly.one(), Z_VAR)
_cheb_t_cache: tuple[LaurentPoly, ...] = (LaurentPoly.const(2), Z_VAR)
_cheb_s_subst_cache: tuple[LaurentPoly, ...] = (LaurentPoly.one(), Z_OF_T)


def fib(n: int) -> int:
    """Fibonacci number F_n for any integer n (F_{-k} = (-1)^{k+1} F_k)."""
    global _fib_cache
    if n < 0:
        value = fib(-n)
        return value if n % 2 else -value
    cache = _fib_cache
    if n >= len(cache):
        ext = list(cache)
        while len(ext) <= n:
            ext.append(ext[-1] + ext[-2])
        cache = tuple(ext)
        _fib_cache = cache
    return cache[n]


def lucas(n: int) -> int:
    """Lucas number L_n = F_{n-1} + F_{n+1}."""
    return fib(n - 1) + fib(n + 1)


def _grown(cache: tuple, n: int, step) -> tuple:
    if n < len(cache):
        return cache
    ext = list(cache)
    while len(ext) <= n:
        ext.append(step(ext))
    return tuple(ext)


def cheb_S(n: int) -> LaurentPoly:
    """Second-kind Chebyshev polynomial S_n in the variable z."""
    global _cheb_s_cache
    if n < 0:
        if n == -1:
            return LaurentPoly.zero()
        return -cheb_S(-n - 2)
    _cheb_s_cache = cache = _grown(
        _cheb_s_cache, n, lambda ext: Z_VAR * ext[-1] - ext[-2]
    )
    return cache[n]


def cheb_T(n: int) -> LaurentPoly:
    """First-kind Chebyshev polynomial T_n in the variable z (T_0 = 2)."""
    global _cheb_t_cache
    n = abs(n)
    _cheb_t_cache = cache = _grown(
        _cheb_t_cache, n, lambda ext: Z_VAR * ext[-1] - ext[-2]
    )
    return cache[n]


def cheb_S_at(n: int, x0: int) -> int:
    """S_n evaluated at the integer x0."""
    if n < 0:
        if n == -1:
            return 0
        return -cheb_S_at(-n - 2, x0)
    prev, cur = 0, 1  # S_{-1}, S_0
    for _ in range(n):
        prev, cur = cur, x0 * cur - prev
    return cur


def cheb_S_subst(n: int) -> LaurentPoly:
    """S_n with z = 1 - t - t^{-1} substituted, as a polynomial in t."""
    global _cheb_s_subst_cache
    if n < 0:
        if n == -1:
            return LaurentPoly.zero()
        return -cheb_S_subst(-n - 2)
    _cheb_s_subst_cache = cache = _grown(
        _cheb_s_subst_cache, n, lambda ext: Z_OF_T * ext[-1] - ext[-2]
    )
    return cache[n]


def _chebyshev_values_at(z, count: int) -> list:
    """S_0 .. S_{count-1} evaluated at an arbitrary ring element z."""
    if count <= 0:
        return []
    one = z ** 0
    values = [one]
    prev = one * 0  # S_{-1}
    while len(values) < count:
        prev, nxt = values[-1], z * values[-1] - prev
        values.append(nxt)
    return values


def solve_chebyshev_recurrence(p0, p1, cs: Sequence, z, n: int):
    """Closed form for P_k = z*P_{k-1} - P_{k-2} + c_k.

    ``cs`` lists the inhomogeneous terms c_2 .. c_n; the result is
    S_{n-1}*p1 - S_{n-2}*p0 + sum_{j=0}^{n-2} S_j * c_{n-j}, which equals
    direct iteration (see iterate_chebyshev_recurrence).  Works over any
    commutative ring whose elements support +, -, * (ints, LaurentPoly).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    cs = tuple(cs)
    if len(cs) != max(0, n - 1):
        raise ValueError(f"need exactly {max(0, n - 1)} inhomogeneous terms c_2..c_n")
    if n == 0:
        return p0
    if n == 1:
        return p1
    svals = _chebyshev_values_at(z, n)
    result = svals[n - 1] * p1 - svals[n - 2] * p0
    for j in range(n - 1):
        # c_{n-j} lives at cs[n-j-2]
        result = result + svals[j] * cs[n - j - 2]
    return result


def iterate_chebyshev_recurrence(p0, p1, cs: Sequence, z, n: int):
    """P_n by direct iteration; the independent check of the closed form."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cs = tuple(cs)
    if len(cs) != max(0, n - 1):
        raise ValueError(f"need exactly {max(0, n - 1)} inhomogeneous terms c_2..c_n")
    if n == 0:
        return p0
    prev, cur = p0, p1
    for k in range(2, n + 1):
        prev, cur = cur, z * cur - prev + cs[k - 2]
    return cur


# ---------------------------------------------------------------------------
# Identity suite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    cases: int
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass(frozen=True)
class IdentityReport:
    max_index: int
    checks: tuple[IdentityCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "ok " if c.passed else "FAIL"
            detail = "" if c.passed else f"  first counterexample: {c.counterexample}"
            lines.append(f"{status} {c.name} ({c.cases} cases){detail}")
        return lines


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _run_cases(name: str, cases) -> IdentityCheck:
    count = 0
    for label, ok in cases:
        count += 1
        if not ok:
            return IdentityCheck(name, count, label)
    return IdentityCheck(name, count)


def identity_suite(max_index: int) -> IdentityReport:
    """Exhaustively verify the Fibonacci/Lucas/Chebyshev identities up to
    the given index bound; symbolic identities are exact polynomial
    equalities, Fibonacci ones exact integer equalities."""
    if max_index < 1:
        raise ValueError("max_index must be at least 1")
    m = max_index
    neg = min(10, m)
    s = cheb_S
    t = cheb_T

    # prefix sums of S_0..S_k split by parity, for the product-to-sum sums
    svals = [s(i) for i in range(2 * m + 2)]
    prefix = [LaurentPoly.zero()]
    for v in svals:
        prefix.append(prefix[-1] + v)

    def s_range_sum(lo: int, hi: int) -> LaurentPoly:
        # sum of S_i for lo <= i <= hi with i = lo, lo+2, ..., hi
        total = LaurentPoly.zero()
        for i in range(lo, hi + 1, 2):
            total = total + s(i)
        return total

    checks = [
        _run_cases(
            "fib_doubling",
            (
                (f"n={n}", fib(2 * n) == fib(n) * lucas(n))
                for n in range(1, m + 1)
            ),
        ),
        _run_cases(
            "fib_odd_index_minus_one",
            (
                (
                    f"n={n}",
                    fib(2 * n - 1) - 1
                    == (
                        fib(n) * (fib(n - 2) + fib(n))
                        if n % 2 == 0
                        else fib(n - 1) * (fib(n - 1) + fib(n + 1))
                    ),
                )
                for n in range(1, m + 1)
            ),
        ),
        _run_cases(
            "fib_lucas_product_to_sum",
            (
                (
                    f"m={a}, n={b}",
                    fib(a) * lucas(b) == fib(a + b) + _sign(b) * fib(a - b)
                    and fib(a) * lucas(b) == fib(a + b) - _sign(a) * fib(b - a),
                )
                for a in range(-m, m + 1)
                for b in range(-m, m + 1)
            ),
        ),
        _run_cases(
            "even_fib_equals_cheb_at_3",
            (
                (f"n={n}", fib(2 * n) == cheb_S_at(n - 1, 3))
                for n in range(1, m + 1)
            ),
        ),
        _run_cases(
            "cheb_TT_product",
            (
                (f"m={a}, n={b}", t(a) * t(b) == t(a + b) + t(a - b))
                for a in range(0, m + 1)
                for b in range(-neg, a + 1)
            ),
        ),
        _run_cases(
            "cheb_ST_product",
            (
                (f"m={a}, n={b}", s(a) * t(b) == s(a + b) + s(a - b))
                for a in range(0, m + 1)
                for b in range(-neg, a + 1)
            ),
        ),
        _run_cases(
            "cheb_SS_product_to_sum",
            (
                (f"m={a}, n={b}", s(a) * s(b) == s_range_sum(a - b, a + b))
                for a in range(0, m + 1)
                for b in range(0, a + 1)
            ),
        ),
        _run_cases(
            "cheb_sum_even_prefix",
            (
                (f"k={k}", s(k) * (s(k) + s(k - 1)) == prefix[2 * k + 1])
                for k in range(0, m + 1)
            ),
        ),
        _run_cases(
            "cheb_sum_odd_prefix",
            (
                (f"k={k}", s(k) * (s(k) + s(k + 1)) == prefix[2 * k + 2])
                for k in range(0, m + 1)
            ),
        ),
        _run_cases(
            "cheb_double_index_even",
            (
                (
                    f"k={k}",
                    s(2 * k) == s(k) * s(k) - s(k - 1) * s(k - 1)
                    and s(2 * k) == (s(k) - s(k - 1)) * (s(k) + s(k - 1)),
                )
                for k in range(0, m + 1)
            ),
        ),
        _run_cases(
            "cheb_double_index_odd",
            (
                (
                    f"k={k}",
                    s(2 * k + 1) == s(k) * s(k + 1) - s(k - 1) * s(k)
                    and s(2 * k + 1) == s(k) * (s(k + 1) - s(k - 1)),
                )
                for k in range(0, m + 1)
            ),
        ),
    ]
    return IdentityReport(max_index=m, checks=tuple(checks))


def recurrence_solver_check(max_n: int, trials: int = 30, seed: int = 20230301) -> IdentityCheck:
    """Randomized check that the closed-form solver equals direct iteration
    over both rings (ints and Laurent polynomials)."""
    rng = random.Random(seed)

    def rand_poly() -> LaurentPoly:
        return LaurentPoly(
            {e: rng.randint(-4, 4) for e in range(rng.randint(-2, 0), rng.randint(1, 3))}
        )

    cases = []
    for trial in range(trials):
        n = rng.randint(0, max_n)
        if trial % 2 == 0:
            p0, p1 = rng.randint(-9, 9), rng.randint(-9, 9)
            z = rng.randint(-5, 5)
            cs = [rng.randint(-9, 9) for _ in range(max(0, n - 1))]
        else:
            p0, p1, z = rand_poly(), rand_poly(), rand_poly()
            cs = [rand_poly() for _ in range(max(0, n - 1))]
        closed = solve_chebyshev_recurrence(p0, p1, cs, z, n)
        iterated = iterate_chebyshev_recurrence(p0, p1, cs, z, n)
        cases.append((f"trial={trial}, n={n}", closed == iterated))
    return _run_cases("chebyshev_solver_vs_iteration", cases)
