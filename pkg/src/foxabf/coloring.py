"""Fox coloring group of a braid closure.

The reduced coloring group is presented by the integer matrix
burau(w)|_{t=-1} - Id with one row and the matching column deleted:
deleting the column sets one top arc to zero (killing the trivial
colorings), and deleting the row is harmless because at t = -1 the rows
satisfy the alternating-sign relation with unit weights, so any single
row is a consequence of the others.  Split components (strands the word
never touches) need no special casing: they contribute zero rows/columns
and surface as free rank.

brute_force_coloring_count is the independent oracle: it enumerates all
assignments of Z_m values to the top arcs and propagates the coloring
rule (new undercrossing color = 2*over - under) through the word, keeping
the assignments that close up.  The count equals the number of fixed
vectors of the Burau matrix mod m at t = -1.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass

from .braid import BraidWord, burau_at_minus_one
from .ring import AbelianGroup, Matrix, snf

ENUMERATION_CAP_ENV = "FOXABF_BRUTE_FORCE_CAP"
DEFAULT_ENUMERATION_CAP = 10**7


class EnumerationLimitError(ValueError):
    """Brute-force enumeration would exceed the configured cap."""


def enumeration_cap() -> int:
    raw = os.environ.get(ENUMERATION_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{ENUMERATION_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{ENUMERATION_CAP_ENV} must be positive")
    return cap


@dataclass(frozen=True)
class ColoringResult:
    group: AbelianGroup
    determinant: int
    reduced_matrix: Matrix


def reduced_relation_matrix_int(word: BraidWord, drop_index: int | None = None) -> Matrix:
    """burau(word) at t = -1, minus Id, with row/column ``drop_index``
    (1-based, default the last strand) deleted."""
    drop = word.strands if drop_index is None else drop_index
    if not (1 <= drop <= word.strands):
        raise ValueError(f"drop_index {drop} out of range for {word.strands} strands")
    m = burau_at_minus_one(word) - Matrix.identity(word.strands, one=1)
    return m.delete_row_col(drop - 1, drop - 1)


def coloring_group(word: BraidWord, drop_index: int | None = None) -> ColoringResult:
    """Reduced Fox coloring group of the closure, as SNF invariant factors;
    the determinant is the group order (0 when the group is infinite)."""
    reduced = reduced_relation_matrix_int(word, drop_index)
    group = snf(reduced)
    return ColoringResult(group=group, determinant=group.order(), reduced_matrix=reduced)


def brute_force_coloring_count(word: BraidWord, modulus: int) -> int:
    """Number of Fox colorings of the closure with values in Z_modulus,
    counted by exhaustive enumeration over the top arcs."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    total = modulus**word.strands
    cap = enumeration_cap()
    if total > cap:
        raise EnumerationLimitError(
            f"{modulus}^{word.strands} = {total} assignments exceed the cap {cap} "
            f"(override via {ENUMERATION_CAP_ENV})"
        )
    ops = [(abs(letter) - 1, letter > 0) for letter in word.letters]
    count = 0
    for top in itertools.product(range(modulus), repeat=word.strands):
        x = list(top)
        for i, positive in ops:
            a, b = x[i], x[i + 1]
            if positive:
                x[i] = b
                x[i + 1] = (b + b - a) % modulus
            else:
                x[i] = (a + a - b) % modulus
                x[i + 1] = a
        if tuple(x) == top:
            count += 1
    return count


def coloring_count_from_group(group: AbelianGroup, modulus: int) -> int:
    """Coloring count predicted by Col = Z (+) Col^red:
    m^(1 + free_rank) * prod gcd(d_i, m)."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    count = modulus ** (1 + group.free_rank)
    for d in group.torsion:
        count *= math.gcd(d, modulus)
    return count
