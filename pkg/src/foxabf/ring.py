"""Exact arithmetic core: Laurent polynomials over Z, dense matrices, and
integer Smith normal form.

Integers are plain Python ``int`` (arbitrary precision; Fibonacci-scale
entries up to F_400 and beyond are exact).  Laurent polynomials are
immutable exponent -> coefficient maps with no stored zeros, so equality
is map equality.  Matrices are immutable and work over either ring:
entries may be ``int`` or ``LaurentPoly`` and mix freely, since ints
coerce to constant polynomials.

Everything in this module is a pure function over immutable values and is
safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Union


class InexactDivisionError(ArithmeticError):
    """Raised when an exact ring division leaves a remainder."""


class LaurentPoly:
    """Element of Z[t^(+/-1)], stored as {exponent: nonzero coefficient}."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        data: dict[int, int] = {}
        if coeffs:
            for exp, coef in coeffs.items():
                if not isinstance(exp, int) or not isinstance(coef, int):
                    raise TypeError("exponents and coefficients must be ints")
                if coef:
                    data[exp] = coef
        self._coeffs = data

    @classmethod
    def _raw(cls, data: dict[int, int]) -> "LaurentPoly":
        # internal fast path: data must already be canonical (no zeros)
        poly = cls.__new__(cls)
        poly._coeffs = data
        return poly

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({0: 1})

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls._raw({0: value} if value else {})

    @classmethod
    def t(cls, exp: int = 1) -> "LaurentPoly":
        return cls._raw({exp: 1})

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def terms(self) -> tuple[tuple[int, int], ...]:
        """Terms as (exponent, coefficient) pairs in increasing exponent."""
        return tuple(sorted(self._coeffs.items()))

    def is_unit(self) -> bool:
        """True for +/- t^k, the units of Z[t^(+/-1)]."""
        if len(self._coeffs) != 1:
            return False
        return abs(next(iter(self._coeffs.values()))) == 1

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "LaurentPoly | None":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly.const(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for exp, coef in other._coeffs.items():
            val = out.get(exp, 0) + coef
            if val:
                out[exp] = val
            elif exp in out:
                del out[exp]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) >= 8 and len(b) >= 8:
            dense = self._mul_dense(a, b)
            if dense is not None:
                return dense
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = ea + eb
                val = out.get(exp, 0) + ca * cb
                if val:
                    out[exp] = val
                elif exp in out:
                    del out[exp]
        return LaurentPoly._raw(out)

    @staticmethod
    def _mul_dense(a: dict[int, int], b: dict[int, int]) -> "LaurentPoly | None":
        # list-based convolution; pays off for dense operands, skipped when
        # the exponent span is much larger than the number of terms
        amin, amax = min(a), max(a)
        bmin, bmax = min(b), max(b)
        if (amax - amin) > 4 * len(a) + 16 or (bmax - bmin) > 4 * len(b) + 16:
            return None
        da = [0] * (amax - amin + 1)
        for e, c in a.items():
            da[e - amin] = c
        db = [0] * (bmax - bmin + 1)
        for e, c in b.items():
            db[e - bmin] = c
        out = [0] * (len(da) + len(db) - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    if cb:
                        out[i + j] += ca * cb
        base = amin + bmin
        return LaurentPoly._raw({base + k: v for k, v in enumerate(out) if v})

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = LaurentPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._coeffs.items()})

    def at_minus_one(self) -> int:
        """Evaluate at t = -1 (so t^-1 = -1 as well); exact integer."""
        return sum(c if e % 2 == 0 else -c for e, c in self._coeffs.items())

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        # constant polynomials hash like their integer value so that the
        # int coercion in __eq__ keeps the hash invariant
        if not self._coeffs:
            return hash(0)
        if len(self._coeffs) == 1 and 0 in self._coeffs:
            return hash(self._coeffs[0])
        return hash(tuple(sorted(self._coeffs.items())))

    def __bool__(self):
        return bool(self._coeffs)

    # -- formatting ---------------------------------------------------

    def to_str(self, var: str = "t") -> str:
        """Canonical string: increasing exponents, explicit '*', no spaces.

        Examples: "0", "1-3*t+t^2", "t^-1", "-t^-1+3-t".
        """
        if not self._coeffs:
            return "0"
        parts = []
        for exp, coef in sorted(self._coeffs.items()):
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            if exp == 0:
                body = str(mag)
            else:
                power = var if exp == 1 else f"{var}^{exp}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"LaurentPoly('{self.to_str()}')"


Ring = Union[int, LaurentPoly]


def normalize_unit(p: Ring) -> LaurentPoly:
    """Canonical associate of p under the units +/- t^k.

    The result has minimum exponent 0 and a positive coefficient there,
    which makes ideal generators comparable by plain equality.
    """
    poly = LaurentPoly._coerce(p)
    if poly is None:
        raise TypeError("expected an int or LaurentPoly")
    if poly.is_zero:
        raise ValueError("zero has no canonical associate")
    poly = poly.shift(-poly.min_exp)
    if poly.coeff(0) < 0:
        poly = -poly
    return poly


def divide_exact(a: Ring, b: Ring) -> LaurentPoly:
    """Exact quotient a / b in Z[t^(+/-1)]; raises if b does not divide a."""
    pa, pb = LaurentPoly._coerce(a), LaurentPoly._coerce(b)
    if pa is None or pb is None:
        raise TypeError("expected ints or LaurentPolys")
    if pb.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if pa.is_zero:
        return LaurentPoly.zero()
    shift = pa.min_exp - pb.min_exp
    da = _dense(pa)
    db = _dense(pb)
    if len(da) < len(db):
        raise InexactDivisionError(f"({pa}) is not divisible by ({pb})")
    rem = list(da)
    lead = db[-1]
    quot = [0] * (len(da) - len(db) + 1)
    for i in range(len(quot) - 1, -1, -1):
        top = rem[i + len(db) - 1]
        if top % lead:
            raise InexactDivisionError(f"({pa}) is not divisible by ({pb})")
        q = top // lead
        quot[i] = q
        if q:
            for j, c in enumerate(db):
                rem[i + j] -= q * c
    if any(rem):
        raise InexactDivisionError(f"({pa}) is not divisible by ({pb})")
    return LaurentPoly({i + shift: c for i, c in enumerate(quot)})


def laurent_gcd(a: Ring, b: Ring) -> LaurentPoly:
    """gcd in Z[t^(+/-1)], returned in normalize_unit form.

    Clears powers of t, then uses content/primitive-part gcd over Z[t]
    (primitive pseudo-remainder sequence); well defined up to units since
    Z[t] is a UFD.
    """
    pa, pb = LaurentPoly._coerce(a), LaurentPoly._coerce(b)
    if pa is None or pb is None:
        raise TypeError("expected ints or LaurentPolys")
    if pa.is_zero and pb.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if pa.is_zero:
        return normalize_unit(pb)
    if pb.is_zero:
        return normalize_unit(pa)
    ca, fa = _content_primitive(_dense(pa))
    cb, fb = _content_primitive(_dense(pb))
    content = math.gcd(ca, cb)
    prim = _primitive_gcd(fa, fb)
    return normalize_unit(LaurentPoly({i: content * c for i, c in enumerate(prim)}))


def _dense(p: LaurentPoly) -> list[int]:
    """Coefficients of t^{-min_exp} * p as an ascending dense list."""
    lo, hi = p.min_exp, p.max_exp
    out = [0] * (hi - lo + 1)
    for e, c in p.terms():
        out[e - lo] = c
    return out


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _content_primitive(f: list[int]) -> tuple[int, list[int]]:
    content = 0
    for c in f:
        content = math.gcd(content, c)
    prim = [c // content for c in f]
    if prim[-1] < 0:
        prim = [-c for c in prim]
    return content, prim


def _pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of f by g (both dense ascending, g nonzero)."""
    f = _trim(list(f))
    lead = g[-1]
    dg = len(g) - 1
    while f and len(f) - 1 >= dg:
        top = f[-1]
        k = len(f) - 1 - dg
        f = [lead * c for c in f]
        for j, c in enumerate(g):
            f[k + j] -= top * c
        _trim(f)
    return f


def _primitive_gcd(f: list[int], g: list[int]) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _pseudo_rem(f, g)
        f, g = g, (_content_primitive(r)[1] if r else [])
    return _content_primitive(f)[1]


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix over Z or Z[t^(+/-1)] (entries int/LaurentPoly)."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable], shape: tuple[int, int] | None = None):
        data = tuple(tuple(row) for row in rows)
        if data:
            nrows, ncols = len(data), len(data[0])
            if any(len(row) != ncols for row in data):
                raise ValueError("rows must all have the same length")
            if ncols == 0:
                raise ValueError("rows must be non-empty")
        else:
            nrows, ncols = shape if shape is not None else (0, 0)
            if nrows or ncols:
                raise ValueError("empty data only supports the 0x0 shape")
        self.rows = nrows
        self.cols = ncols
        self._data = data

    @classmethod
    def identity(cls, n: int, one: Ring = 1) -> "Matrix":
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int, zero: Ring = 0) -> "Matrix":
        if nrows == 0 or ncols == 0:
            return cls([], shape=(0, 0))
        return cls([[zero] * ncols for _ in range(nrows)])

    def __getitem__(self, key: tuple[int, int]):
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def entries(self) -> tuple[tuple, ...]:
        return self._data

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            a == b for ra, rb in zip(self._data, other._data) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
            shape=(self.rows, self.cols),
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
            shape=(self.rows, self.cols),
        )

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self._data], shape=(self.rows, self.cols))

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = list(zip(*other._data)) if other._data else []
        out = []
        for arow in self._data:
            out.append([_dot(arow, bcol) for bcol in bt])
        return Matrix(out, shape=(self.rows, other.cols))

    def _check_same_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix dimensions do not match")

    def map(self, fn: Callable) -> "Matrix":
        return Matrix([[fn(a) for a in row] for row in self._data], shape=(self.rows, self.cols))

    def delete_row_col(self, i: int, j: int) -> "Matrix":
        """Matrix with row i and column j removed (0-based)."""
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("row/column index out of range")
        if self.rows == 1 and self.cols == 1:
            return Matrix([], shape=(0, 0))
        if self.rows == 1 or self.cols == 1:
            raise ValueError("result would be empty in one dimension only")
        return Matrix(
            [
                [a for jj, a in enumerate(row) if jj != j]
                for ii, row in enumerate(self._data)
                if ii != i
            ]
        )

    def det(self) -> Ring:
        """Exact determinant: cofactor expansion for n <= 3, fraction-free
        (Bareiss) elimination beyond; both stay inside the entry ring."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        if n <= 3:
            return _det_cofactor(self._data)
        return _det_bareiss([list(row) for row in self._data])

    def __str__(self):
        return "\n".join("[" + ", ".join(str(a) for a in row) + "]" for row in self._data)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self._data]!r})"


def _dot(arow, bcol):
    it = zip(arow, bcol)
    a, b = next(it)
    total = a * b
    for a, b in it:
        total = total + a * b
    return total


def _det_cofactor(data):
    n = len(data)
    if n == 1:
        return data[0][0]
    if n == 2:
        (a, b), (c, d) = data
        return a * d - b * c
    (a, b, c), (d, e, f), (g, h, i) = data
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _entry_is_zero(x) -> bool:
    return x.is_zero if isinstance(x, LaurentPoly) else x == 0


def _entry_div_exact(a, b):
    if isinstance(a, LaurentPoly) or isinstance(b, LaurentPoly):
        return divide_exact(a, b)
    q, r = divmod(a, b)
    if r:
        raise InexactDivisionError(f"{a} is not divisible by {b}")
    return q


def _det_bareiss(a):
    # fraction-free elimination; every division is exact in the entry ring
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _entry_is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not _entry_is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _entry_div_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form and finitely generated abelian groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianGroup:
    """Invariant-factor form: torsion chain d1 | d2 | ... (each >= 2) plus
    free rank.  Smallest factor first; Z_1 summands are never stored."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(d < 2 for d in self.torsion):
            raise ValueError("invariant factors must be at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"broken divisibility chain: {a} does not divide {b}")

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def torsion_order(self) -> int:
        order = 1
        for d in self.torsion:
            order *= d
        return order

    def order(self) -> int:
        """Group order; 0 stands for infinite (positive free rank)."""
        return 0 if self.free_rank else self.torsion_order()

    def describe(self) -> str:
        """Display string, largest torsion factor first (e.g. 'Z_40 + Z_8')."""
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{d}" for d in reversed(self.torsion))
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.describe()


def smith_invariant_factors(mat: Matrix) -> list[int]:
    """Nonzero diagonal of the Smith normal form of an integer matrix.

    Returns [d1, ..., dr] with d1 | d2 | ... | dr, each positive; r is the
    rank.  Pivot choice is minimal absolute value, with a divisibility
    sweep so the chain condition holds without a separate pass.
    """
    a = []
    for row in mat.entries():
        out_row = []
        for entry in row:
            if isinstance(entry, LaurentPoly):
                raise TypeError("Smith normal form requires integer entries")
            out_row.append(int(entry))
        a.append(out_row)
    nr, nc = mat.rows, mat.cols
    k = 0
    while k < nr and k < nc:
        pivot = _find_min_pivot(a, k, nr, nc)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
        while True:
            # clear column k, then row k; restart whenever a smaller
            # remainder becomes the better pivot
            restart = False
            for i in range(k + 1, nr):
                while a[i][k]:
                    q = a[i][k] // a[k][k]
                    for j in range(k, nc):
                        a[i][j] -= q * a[k][j]
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
            for j in range(k + 1, nc):
                while a[k][j]:
                    q = a[k][j] // a[k][k]
                    for i in range(k, nr):
                        a[i][j] -= q * a[i][k]
                    if a[k][j]:
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        restart = True
                if restart:
                    break
            if restart:
                continue
            if any(a[i][k] for i in range(k + 1, nr)):
                continue
            # divisibility sweep: fold any non-multiple into the pivot row
            offender = None
            for i in range(k + 1, nr):
                for j in range(k + 1, nc):
                    if a[i][j] % a[k][k]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(k, nc):
                a[k][j] += a[offender][j]
        k += 1
    factors = [abs(a[i][i]) for i in range(k)]
    # chain is guaranteed by the sweep; keep a cheap canonical fix anyway
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if factors[j] % factors[i]:
                g = math.gcd(factors[i], factors[j])
                factors[i], factors[j] = g, factors[i] * factors[j] // g
    factors.sort()
    return factors


def _find_min_pivot(a, k, nr, nc):
    best = None
    best_abs = None
    for i in range(k, nr):
        for j in range(k, nc):
            v = a[i][j]
            if v and (best_abs is None or abs(v) < best_abs):
                best, best_abs = (i, j), abs(v)
                if best_abs == 1:
                    return best
    return best


def snf(mat: Matrix) -> AbelianGroup:
    """Abelian group presented by an integer matrix (relations in rows,
    generators in columns): cokernel in invariant-factor form."""
    factors = smith_invariant_factors(mat)
    return AbelianGroup(
        torsion=tuple(d for d in factors if d > 1),
        free_rank=mat.cols - len(factors),
    )
