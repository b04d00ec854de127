"""Reduced Alexander-Burau-Fox presentations over Z[t^(+/-1)].

For a general braid closure the reduced presentation is burau(w) - Id
with one row and the matching column deleted (the weighted left null
vector has unit entries t^k, so every row is redundant; deleting a column
sets that arc to zero).  Only the presentation matrix and the Alexander
polynomial are emitted for general words: Z[t^(+/-1)] is not a PID, so no
cyclic decomposition is claimed there.

For the wheel family (closures of (sigma_1 sigma_2^{-1})^n) the module
does decompose, and two independent routes compute the same 2x2
presentation:

* recursive route: write the bottom-arc differences of the 2k-tangle as
  P_n = P^a_n*a + P^c_n*c and Q_n = Q^a_n*a + Q^c_n*c (middle arc set to
  zero) and iterate the first-order pair recursion

      P_{n+1} = -t*P_n - t^{-1}*Q_n - a
      Q_{n+1} = (1-t)*P_{n+1} + t*P_n + a - c

  from P_0 = Q_0 = 0 (the identity braid);

* closed route: with g_{2k} = S_{k-1} and g_{2k+1} = S_{k-1} + S_k
  (Chebyshev S at z = 1 - t - t^{-1}), the matrix is

      [ -g_n*(g_{n+1} + t^{-1}*g_{n-1})     t^{-1}*g_n*g_{n-1}        ]
      [  t*g_n*g_{n+1}                     -g_n*(g_{n+1} + t*g_{n-1}) ]

  The plus signs inside the diagonal are forced: with them the two routes
  agree entrywise, det(A_n/(-g_n)) is exactly 1 for odd n and
  3 - t - t^{-1} for even n, and det A_n equals the determinant of the
  Burau-route reduced matrix (middle strand dropped).

wheel_euclidean_reduction divides the closed matrix by -g_n, replays the
column operations that bring the first row to (g_{n+1}, g_{n-1}), then
runs the Euclidean descent (col1 -= z*col2, negate, swap) down to (1, 0);
the result is the cyclic decomposition with ideal generators
(g_n, det(A'_n) * g_n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, burau, wheel_braid
from .ring import (
    InexactDivisionError,
    LaurentPoly,
    Matrix,
    divide_exact,
    normalize_unit,
)
from .sequences import Z_OF_T, cheb_S_subst

_T = LaurentPoly.t()
_T_INV = LaurentPoly.t(-1)
_ONE = LaurentPoly.one()
_ZERO = LaurentPoly.zero()


class InternalConsistencyError(RuntimeError):
    """A structural identity the implementation relies on failed; this
    signals a bug, not bad input."""


@dataclass(frozen=True)
class ModulePresentation:
    """Relation matrix (rows are relations), normalized Alexander
    polynomial, and - for the wheel family only - the ordered pair of
    cyclic ideal generators (g, h) with g | h."""

    matrix: Matrix
    alexander: LaurentPoly
    ideal_gens: tuple[LaurentPoly, LaurentPoly] | None = None


def reduced_abf_matrix(word: BraidWord, drop_index: int | None = None) -> Matrix:
    """burau(word) - Id with row/column ``drop_index`` (1-based, default
    the last strand) deleted."""
    drop = word.strands if drop_index is None else drop_index
    if not (1 <= drop <= word.strands):
        raise ValueError(f"drop_index {drop} out of range for {word.strands} strands")
    m = burau(word) - Matrix.identity(word.strands, one=_ONE)
    return m.delete_row_col(drop - 1, drop - 1)


def alexander_polynomial(word: BraidWord) -> LaurentPoly:
    """Normalized generator of the maximal-minor ideal of the reduced
    presentation; 1 for the unknot, 0 when the determinant vanishes."""
    det = reduced_abf_matrix(word).det()
    det = LaurentPoly.const(det) if isinstance(det, int) else det
    if det.is_zero:
        return LaurentPoly.zero()
    return normalize_unit(det)


def general_presentation(word: BraidWord, drop_index: int | None = None) -> ModulePresentation:
    """Presentation + Alexander polynomial for an arbitrary braid word
    (no cyclic decomposition)."""
    matrix = reduced_abf_matrix(word, drop_index)
    det = matrix.det()
    det = LaurentPoly.const(det) if isinstance(det, int) else det
    alexander = LaurentPoly.zero() if det.is_zero else normalize_unit(det)
    return ModulePresentation(matrix=matrix, alexander=alexander, ideal_gens=None)


def wheel_g(n: int) -> LaurentPoly:
    """The common Chebyshev factor g_n of the wheel presentation matrix:
    S_{k-1} for n = 2k, S_{k-1} + S_k for n = 2k+1 (z = 1 - t - t^{-1})."""
    if n < 0:
        raise ValueError("g_n is only used for n >= 0")
    k = n // 2
    if n % 2 == 0:
        return cheb_S_subst(k - 1)
    return cheb_S_subst(k - 1) + cheb_S_subst(k)


def wheel_abf_matrix_recursive(n: int) -> Matrix:
    """Wheel presentation [[P^a_n, P^c_n], [Q^a_n, Q^c_n]] by iterating the
    pair recursion from the identity braid."""
    if n < 1:
        raise ValueError("the wheel family starts at n = 1")
    pa = pc = qa = qc = _ZERO
    for _ in range(n):
        pa, pc, pa_prev, pc_prev = (
            -(_T * pa) - _T_INV * qa - 1,
            -(_T * pc) - _T_INV * qc,
            pa,
            pc,
        )
        qa = (_ONE - _T) * pa + _T * pa_prev + 1
        qc = (_ONE - _T) * pc + _T * pc_prev - 1
    return Matrix([[pa, pc], [qa, qc]])


def wheel_abf_matrix_closed(n: int) -> Matrix:
    """Wheel presentation from the Chebyshev closed form."""
    if n < 1:
        raise ValueError("the wheel family starts at n = 1")
    g = wheel_g(n)
    g_prev = wheel_g(n - 1)
    g_next = wheel_g(n + 1)
    return Matrix(
        [
            [-(g * (g_next + _T_INV * g_prev)), _T_INV * g * g_prev],
            [_T * g * g_next, -(g * (g_next + _T * g_prev))],
        ]
    )


def wheel_euclidean_reduction(
    n: int,
) -> tuple[tuple[LaurentPoly, LaurentPoly], LaurentPoly]:
    """Cyclic decomposition of the wheel module.

    Returns ((g, h), det_a_prime) where g = g_n and h = det(A'_n) * g_n,
    both unit-normalized, and det_a_prime is the exact determinant of
    A'_n = A_n / (-g_n): 1 for odd n, 3 - t - t^{-1} for even n.
    """
    if n < 1:
        raise ValueError("the wheel family starts at n = 1")
    a = wheel_abf_matrix_closed(n)
    g = wheel_g(n)
    neg_g = -g
    try:
        aprime = a.map(lambda entry: divide_exact(entry, neg_g))
    except InexactDivisionError as exc:
        raise InternalConsistencyError(
            f"entries of the wheel matrix are not divisible by g_{n}"
        ) from exc
    det_a_prime = aprime.det()

    # column replay: [col1, col2] with col = [top, bottom]
    col1 = [aprime[0, 0], aprime[1, 0]]
    col2 = [aprime[0, 1], aprime[1, 1]]
    col1 = [col1[0] + col2[0], col1[1] + col2[1]]  # first row -> (g_{n+1}, -t^-1 g_{n-1})
    col2 = [-(_T * col2[0]), -(_T * col2[1])]  # first row -> (g_{n+1}, g_{n-1})

    steps = 0
    while (col1[0], col2[0]) != (_ONE, _ZERO):
        if steps > n + 4:
            raise InternalConsistencyError(
                f"Euclidean descent did not terminate for n = {n}"
            )
        steps += 1
        u, v = col1[0], col2[0]
        if v == _ONE:
            # terminal cleanup: (u, 1) -> (0, 1) -> swap -> (1, 0)
            col1 = [col1[0] - u * col2[0], col1[1] - u * col2[1]]
            col1, col2 = col2, col1
        else:
            # one Euclidean step: (S_j, S_{j-1}) -> (S_{j-1}, S_{j-2})
            col1 = [
                -(col1[0] - Z_OF_T * col2[0]),
                -(col1[1] - Z_OF_T * col2[1]),
            ]
            col1, col2 = col2, col1

    # first row is (1, 0); clearing the second row's first entry leaves
    # diag(1, y) with y an associate of det A'_n
    y = col2[1]
    if normalize_unit(y) != normalize_unit(det_a_prime):
        raise InternalConsistencyError(
            f"Euclidean reduction of the wheel matrix lost the determinant at n = {n}"
        )
    gens = (normalize_unit(g), normalize_unit(det_a_prime * g))
    return gens, det_a_prime


def wheel_module(n: int) -> ModulePresentation:
    """Reduced module of the wheel-family closure: closed-form matrix,
    cyclic ideal generators, and their normalized product as the
    Alexander polynomial."""
    matrix = wheel_abf_matrix_closed(n)
    gens, _ = wheel_euclidean_reduction(n)
    alexander = normalize_unit(gens[0] * gens[1])
    divide_exact(gens[1], gens[0])  # g | h, by construction; fails loudly otherwise
    if alexander != normalize_unit(matrix.det()):
        raise InternalConsistencyError(
            f"ideal generators do not multiply to det A_{n}"
        )
    return ModulePresentation(matrix=matrix, alexander=alexander, ideal_gens=gens)


def wheel_reduced_burau_matrix(n: int) -> Matrix:
    """Burau-route presentation with the middle strand dropped; the
    independent check of the closed form (equal determinants)."""
    return reduced_abf_matrix(wheel_braid(n), drop_index=2)
