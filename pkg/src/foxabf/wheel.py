"""Closed-form predictions for the wheel-graph links and the master
cross-verification combining every route.

The closure of (sigma_1 sigma_2^{-1})^n has reduced coloring group
Z_{L_n} (+) Z_{L_n} for odd n and Z_{F_n} (+) Z_{5 F_n} for even n.  The
Fibonacci route presents it by the 2x2 matrix
[[F_{2n}, F_{2n-1}-1], [F_{2n+1}-1, F_{2n}]] and reduces it by an
alternating pair of column operations; reduction_trace replays that exact
operation sequence.  goeritz_equivalence_check compares against the
independently derived Goeritz presentation built from S_k(3).
"""

from __future__ import annotations

from dataclasses import dataclass

from .alexander import wheel_module
from .braid import wheel_braid
from .coloring import (
    ColoringResult,
    brute_force_coloring_count,
    coloring_count_from_group,
    coloring_group,
)
from .ring import AbelianGroup, Matrix, snf
from .sequences import cheb_S_at, fib, lucas


@dataclass(frozen=True)
class BruteForceCheck:
    modulus: int
    count: int
    predicted: int

    @property
    def ok(self) -> bool:
        return self.count == self.predicted


@dataclass(frozen=True)
class WheelReport:
    n: int
    closed_form_group: AbelianGroup
    burau_group: AbelianGroup
    abf_gens_at_minus_one: tuple[int, ...]
    brute_force_checks: tuple[BruteForceCheck, ...]
    goeritz_ok: bool
    all_consistent: bool


def fox_closed_form(n: int) -> AbelianGroup:
    """Reduced coloring group of the n-spoke wheel closure in closed form
    (factors of 1 dropped, smallest invariant factor first)."""
    if n < 1:
        raise ValueError("the wheel family starts at n = 1")
    if n % 2:
        ln = lucas(n)
        torsion = [ln, ln]
    else:
        fn = fib(n)
        torsion = [fn, 5 * fn]
    return AbelianGroup(torsion=tuple(d for d in torsion if d > 1))


def fibonacci_relation_matrix(n: int) -> Matrix:
    """2x2 Fibonacci presentation of the reduced coloring group."""
    if n < 1:
        raise ValueError("the wheel family starts at n = 1")
    return Matrix(
        [
            [fib(2 * n), fib(2 * n - 1) - 1],
            [fib(2 * n + 1) - 1, fib(2 * n)],
        ]
    )


def reduction_trace(n: int) -> list[Matrix]:
    """Exact sequence of matrices obtained from the Fibonacci presentation
    by alternating column operations (col1 -= col2, then col2 -= col1).

    For odd n the trace ends after n+1 operations at the upper-triangular
    matrix [[L_n, F_{n-2} - F_{n+2}], [0, L_n]]; for even n it ends after
    n operations at [[2F_n, -F_n], [F_n, 2F_n]] followed by one extra step
    (col1 += 2*col2) giving [[0, -F_n], [5F_n, 2F_n]].
    """
    if n < 1:
        raise ValueError("the wheel family starts at n = 1")
    trace = [fibonacci_relation_matrix(n)]
    steps = n + 1 if n % 2 else n
    for step in range(1, steps + 1):
        (a, b), (c, d) = trace[-1].entries()
        if step % 2:
            trace.append(Matrix([[a - b, b], [c - d, d]]))
        else:
            trace.append(Matrix([[a, b - a], [c, d - c]]))
    if n % 2 == 0:
        (a, b), (c, d) = trace[-1].entries()
        trace.append(Matrix([[a + 2 * b, b], [c + 2 * d, d]]))
    return trace


def goeritz_equivalence_check(n: int) -> bool:
    """Whether the Goeritz-style matrix built from S_k(3) presents the same
    group as the Fibonacci presentation."""
    if n < 1:
        raise ValueError("the wheel family starts at n = 1")
    goeritz = Matrix(
        [
            [cheb_S_at(n - 1, 3), 1 - cheb_S_at(n, 3)],
            [cheb_S_at(n - 2, 3) + 1, -cheb_S_at(n - 1, 3)],
        ]
    )
    return snf(goeritz) == snf(fibonacci_relation_matrix(n))


def cross_verify(n: int, brute_force_moduli: tuple[int, ...] = ()) -> WheelReport:
    """Run every route for one wheel index and compare:

    closed Fibonacci/Lucas form, Burau reduction at t = -1 (for both the
    default and the middle drop index), the module generators evaluated at
    t = -1, brute-force coloring counts, and the Goeritz presentation.
    """
    if n < 1:
        raise ValueError("the wheel family starts at n = 1")
    word = wheel_braid(n)
    closed = fox_closed_form(n)
    result: ColoringResult = coloring_group(word)
    burau_group = result.group
    drop_middle_group = coloring_group(word, drop_index=2).group

    module = wheel_module(n)
    gens_at = tuple(abs(g.at_minus_one()) for g in module.ideal_gens)
    gens_torsion = tuple(sorted(v for v in gens_at if v > 1))

    checks = []
    for modulus in brute_force_moduli:
        checks.append(
            BruteForceCheck(
                modulus=modulus,
                count=brute_force_coloring_count(word, modulus),
                predicted=coloring_count_from_group(burau_group, modulus),
            )
        )
    goeritz_ok = goeritz_equivalence_check(n)

    consistent = (
        closed == burau_group
        and burau_group == drop_middle_group
        and gens_torsion == closed.torsion
        and all(check.ok for check in checks)
        and goeritz_ok
    )
    return WheelReport(
        n=n,
        closed_form_group=closed,
        burau_group=burau_group,
        abf_gens_at_minus_one=gens_at,
        brute_force_checks=tuple(checks),
        goeritz_ok=goeritz_ok,
        all_consistent=consistent,
    )
