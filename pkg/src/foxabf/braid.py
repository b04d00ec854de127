"""Braid words, the braid-word grammar, and the unreduced Burau
representation.

A word on s strands is a sequence of nonzero integers i with |i| < s:
positive i is the generator sigma_i, negative its inverse.  The text
grammar is whitespace- or comma-separated integers ("1 -2 1 -2"); a JSON
object {"strands": s, "letters": [...]} is accepted as an equivalent wire
form.  When the strand count is omitted it is inferred as max|i| + 1.

Sign convention for Burau: a positive crossing acts on the strand pair as
(a, b) -> (b, t*a + (1-t)*b), i.e. the generator block is [[0, 1], [t, 1-t]]
and the inverse block is [[1-t^-1, t^-1], [1, 0]].  (Braid-theory texts
often swap the roles of t and t^-1; this library fixes the knot-theoretic
choice above.)  burau(w) is the product of the letter matrices in word
order, the weighted row vector (t^{s-1}, ..., t, 1) is a fixed left vector,
and every row sums to 1.  Words are kept exactly as given: no free
reduction or Markov moves, so invariance under them is testable, not
assumed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .ring import LaurentPoly, Matrix


class BraidParseError(ValueError):
    """Invalid braid text; ``position`` is the 1-based offending token."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise ValueError("strand count must be a positive integer")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not isinstance(letter, int) or letter == 0:
                raise ValueError(f"invalid letter {letter!r}: letters are nonzero ints")
            if abs(letter) >= self.strands:
                raise ValueError(
                    f"letter {letter} needs at least {abs(letter) + 1} strands, "
                    f"word has {self.strands}"
                )

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        """Concatenation (composition in the braid group)."""
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-l for l in reversed(self.letters)))

    def as_text(self) -> str:
        return " ".join(str(l) for l in self.letters)


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse braid text (or the JSON object form) into a BraidWord."""
    if strands is not None and (not isinstance(strands, int) or strands < 1):
        raise BraidParseError("strand count must be a positive integer")
    stripped = text.strip()
    if stripped.startswith("{"):
        return _parse_json_braid(stripped, strands)
    letters = []
    tokens = [tok for tok in re.split(r"[\s,]+", stripped) if tok]
    for pos, token in enumerate(tokens, start=1):
        try:
            value = int(token, 10)
        except ValueError:
            raise BraidParseError(
                f"invalid braid letter {token!r} at token {pos}", position=pos
            ) from None
        if value == 0:
            raise BraidParseError(f"braid letter 0 at token {pos}", position=pos)
        letters.append(value)
    inferred = max((abs(l) for l in letters), default=0) + 1
    if strands is None:
        if not letters:
            raise BraidParseError(
                "cannot infer strand count of an empty word; pass strands explicitly"
            )
        strands = inferred
    elif letters and inferred > strands:
        bad = max(range(len(letters)), key=lambda i: abs(letters[i]))
        raise BraidParseError(
            f"letter {letters[bad]} at token {bad + 1} does not fit on "
            f"{strands} strands",
            position=bad + 1,
        )
    return BraidWord(strands, tuple(letters))


def _parse_json_braid(text: str, strands: int | None) -> BraidWord:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BraidParseError(f"invalid JSON braid: {exc}") from None
    if not isinstance(obj, dict) or not isinstance(obj.get("letters"), list):
        raise BraidParseError('JSON braid must look like {"strands": s, "letters": [...]}')
    own = obj.get("strands")
    if own is not None and strands is not None and own != strands:
        raise BraidParseError(
            f"JSON strand count {own} conflicts with the explicit value {strands}"
        )
    letters = obj["letters"]
    body = " ".join(str(l) for l in letters) if letters else ""
    return parse_braid(body, strands=own if own is not None else strands)


def wheel_braid(n: int) -> BraidWord:
    """The 3-strand word (sigma_1 sigma_2^{-1})^n whose closure is the Tait
    diagram of the wheel graph with n spokes."""
    if n < 1:
        raise ValueError("the wheel family starts at n = 1")
    return BraidWord(3, (1, -2) * n)


# ---------------------------------------------------------------------------
# Burau representation
# ---------------------------------------------------------------------------

_T = LaurentPoly.t()
_T_INV = LaurentPoly.t(-1)
_ONE = LaurentPoly.one()
_ZERO = LaurentPoly.zero()

# 2x2 crossing blocks over Z[t^(+/-1)] and their t = -1 specializations
_POS_BLOCK = ((_ZERO, _ONE), (_T, _ONE - _T))
_NEG_BLOCK = ((_ONE - _T_INV, _T_INV), (_ONE, _ZERO))
_POS_BLOCK_INT = ((0, 1), (-1, 2))
_NEG_BLOCK_INT = ((2, -1), (1, 0))


def _letter_matrix(letter: int, strands: int, pos_block, neg_block, one, zero) -> Matrix:
    i = abs(letter) - 1
    block = pos_block if letter > 0 else neg_block
    rows = []
    for r in range(strands):
        row = [zero] * strands
        if r in (i, i + 1):
            row[i] = block[r - i][0]
            row[i + 1] = block[r - i][1]
        else:
            row[r] = one
        rows.append(row)
    return Matrix(rows)


def burau(word: BraidWord) -> Matrix:
    """Unreduced Burau matrix of the word: the product of its letter
    matrices in word order (the identity braid gives Id)."""
    result = Matrix.identity(word.strands, one=_ONE)
    for letter in word.letters:
        result = result * _letter_matrix(letter, word.strands, _POS_BLOCK, _NEG_BLOCK, _ONE, _ZERO)
    return result


def burau_at_minus_one(word: BraidWord) -> Matrix:
    """burau(word) specialized at t = -1, computed over plain integers."""
    result = Matrix.identity(word.strands, one=1)
    for letter in word.letters:
        result = result * _letter_matrix(letter, word.strands, _POS_BLOCK_INT, _NEG_BLOCK_INT, 1, 0)
    return result


def permutation(word: BraidWord) -> tuple[int, ...]:
    """Underlying permutation: entry i-1 is the bottom position of the
    strand entering at top position i (1-based values)."""
    state = list(range(word.strands))  # state[p] = strand currently at position p
    for letter in word.letters:
        i = abs(letter) - 1
        state[i], state[i + 1] = state[i + 1], state[i]
    image = [0] * word.strands
    for pos, strand in enumerate(state):
        image[strand] = pos + 1
    return tuple(image)


def cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur] - 1
    return cycles


def closure_components(word: BraidWord) -> int:
    """Number of link components of the braid closure."""
    return cycle_count(permutation(word))


def exponent_sum(word: BraidWord) -> int:
    return sum(1 if letter > 0 else -1 for letter in word.letters)
