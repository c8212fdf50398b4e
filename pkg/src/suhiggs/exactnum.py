"""Exact arithmetic over the Gaussian rationals Q(i).

Scalars are stored as three integers ``(a, b, d)`` meaning ``(a + b i) / d``
with ``d > 0`` and ``gcd(a, b, d) == 1``, so equal values are structurally
equal and hash alike.  Matrices are immutable grids of such scalars; rank and
determinant go through fraction-free (Bareiss) elimination over the Gaussian
integers after clearing denominators row by row.

Matrix indices are 0-based Python indices; the Lie-theoretic modules map the
1-based conventions of the math onto them explicitly.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError, InternalInconsistencyError, ParseError, ShapeError

__all__ = [
    "GaussianRational",
    "GR",
    "I",
    "PolyGR",
    "MatrixGR",
    "as_gr",
    "char_poly",
    "determinant",
    "inverse",
    "kernel_basis",
    "matrix_rank",
    "poly_eval_matrix",
    "trace_exterior_power",
    "scalar_to_wire",
    "scalar_from_wire",
    "matrix_to_wire",
    "matrix_from_wire",
]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class GaussianRational:
    """An exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational) and im == 0:
            self._a, self._b, self._d = re._a, re._b, re._d
            return
        fr = Fraction(re)
        fi = Fraction(im)
        d = _lcm(fr.denominator, fi.denominator)
        self._set(fr.numerator * (d // fr.denominator), fi.numerator * (d // fi.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        if d < 0:
            a, b, d = -a, -b, -d
        if a == 0 and b == 0:
            self._a, self._b, self._d = 0, 0, 1
            return
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        obj = cls.__new__(cls)
        if d == 0:
            raise ZeroDivisionError("GaussianRational denominator is zero")
        obj._set(a, b, d)
        return obj

    # -- accessors -------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def parts(self) -> tuple[int, int, int]:
        """Common-denominator form ``(a, b, d)``."""
        return self._a, self._b, self._d

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """``|z|^2`` as a rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        o = as_gr_or_none(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = as_gr_or_none(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a - o._a, self._b - o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d - o._a * self._d, self._b * o._d - o._b * self._d, self._d * o._d
        )

    def __rsub__(self, other):
        o = as_gr_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = as_gr_or_none(other)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return GaussianRational._raw(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_gr_or_none(other)
        if o is None:
            return NotImplemented
        if o._a == 0 and o._b == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        n2 = a2 * a2 + b2 * b2
        return GaussianRational._raw(
            (a1 * a2 + b1 * b2) * o._d, (b1 * a2 - a1 * b2) * o._d, self._d * n2
        )

    def __rtruediv__(self, other):
        o = as_gr_or_none(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (ONE / self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        o = as_gr_or_none(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __repr__(self):
        return f"GR({self})"

    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return str(re_)
        if re_ == 0:
            return f"{im_}i"
        sign = "+" if im_ > 0 else "-"
        return f"{re_}{sign}{abs(im_)}i"


GR = GaussianRational
ZERO = GaussianRational()
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

_RATIONAL_TEXT = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _parse_scalar_text(text: str) -> "GaussianRational":
    s = text.replace(" ", "")
    real, imag = s, "0"
    if s.endswith("i"):
        body = s[:-1]
        k = max(body.rfind("+"), body.rfind("-"))
        if k > 0:
            real, imag = body[:k], body[k:]
        else:
            real, imag = "0", body
        if imag in ("", "+", "-"):
            imag += "1"
    if not (_RATIONAL_TEXT.match(real) and _RATIONAL_TEXT.match(imag)):
        raise ParseError(f"cannot parse scalar {text!r}")
    try:
        return GaussianRational(Fraction(real), Fraction(imag))
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def as_gr_or_none(x) -> GaussianRational | None:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return GaussianRational._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    return None


def as_gr(x) -> GaussianRational:
    """Coerce ints, Fractions, ``(re, im)`` pairs and strings like ``"1/2-3i"``."""
    g = as_gr_or_none(x)
    if g is not None:
        return g
    if isinstance(x, tuple) and len(x) == 2:
        return GaussianRational(x[0], x[1])
    if isinstance(x, str):
        return _parse_scalar_text(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


# ---------------------------------------------------------------------------
# polynomials


class PolyGR:
    """Univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_gr(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)

    @classmethod
    def from_roots(cls, roots: Iterable) -> "PolyGR":
        """``prod (x - r)``."""
        cs = [ONE]
        for r in roots:
            r = as_gr(r)
            nxt = [ZERO] * (len(cs) + 1)
            for k, c in enumerate(cs):
                nxt[k + 1] = nxt[k + 1] + c
                nxt[k] = nxt[k] - r * c
            cs = nxt
        return cls(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "PolyGR":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        x = as_gr(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = other if isinstance(other, PolyGR) else PolyGR([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyGR(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return PolyGR(-c for c in self.coeffs)

    def __sub__(self, other):
        other = other if isinstance(other, PolyGR) else PolyGR([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PolyGR):
            s = as_gr(other)
            return PolyGR(c * s for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return PolyGR()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return PolyGR(out)

    __rmul__ = __mul__

    def divmod_linear(self, r) -> tuple["PolyGR", GaussianRational]:
        """Synthetic division by ``(x - r)``: quotient and remainder."""
        r = as_gr(r)
        if self.is_zero():
            return PolyGR(), ZERO
        out = []
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop()
        return PolyGR(reversed(out)), rem

    def root_multiplicity(self, r) -> int:
        if self.is_zero():
            raise DomainError("root multiplicity of the zero polynomial")
        k, q = 0, self
        while True:
            q2, rem = q.divmod_linear(r)
            if rem:
                return k
            k, q = k + 1, q2

    def __eq__(self, other):
        if isinstance(other, PolyGR):
            return self.coeffs == other.coeffs
        g = as_gr_or_none(other)
        if g is not None:
            return self.coeffs == PolyGR([g]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyGR({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("λ" if k == 1 else f"λ^{k}")
            if c.is_real():
                v = c.re
                sign = "-" if v < 0 else "+"
                mag = abs(v)
                body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            else:
                sign, body = "+", f"({c}){mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


# ---------------------------------------------------------------------------
# matrices


class MatrixGR:
    """Immutable dense matrix over Q(i)."""

    __slots__ = ("nrows", "ncols", "_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(as_gr(x) for x in row) for row in rows)
        ncols = len(rs[0]) if rs else 0
        if any(len(r) != ncols for r in rs):
            raise ShapeError("ragged matrix rows")
        self.nrows = len(rs)
        self.ncols = ncols
        self._rows = rs
        self._hash = None

    @classmethod
    def _trusted(cls, rows: tuple, ncols: int) -> "MatrixGR":
        obj = cls.__new__(cls)
        obj.nrows = len(rows)
        obj.ncols = ncols
        obj._rows = rows
        obj._hash = None
        return obj

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "MatrixGR":
        ncols = nrows if ncols is None else ncols
        return cls._trusted(tuple((ZERO,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "MatrixGR":
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, values: Sequence) -> "MatrixGR":
        vals = [as_gr(v) for v in values]
        n = len(vals)
        return cls._trusted(
            tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def unit(cls, nrows: int, ncols: int, i: int, j: int, value=1) -> "MatrixGR":
        """Matrix with a single nonzero entry at ``(i, j)``."""
        v = as_gr(value)
        return cls._trusted(
            tuple(
                tuple(v if (r == i and c == j) else ZERO for c in range(ncols))
                for r in range(nrows)
            ),
            ncols,
        )

    @classmethod
    def column(cls, values: Sequence) -> "MatrixGR":
        return cls([[v] for v in values])

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence["MatrixGR"]]) -> "MatrixGR":
        rows = []
        for brow in blocks:
            h = brow[0].nrows
            if any(b.nrows != h for b in brow):
                raise ShapeError("block row heights differ")
            for r in range(h):
                rows.append(tuple(x for b in brow for x in b._rows[r]))
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("block column widths differ")
        return cls._trusted(tuple(rows), ncols)

    # -- access ----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple[GaussianRational, ...], ...]:
        return self._rows

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> GaussianRational:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[GaussianRational, ...]:
        return tuple(r[j] for r in self._rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "MatrixGR":
        return MatrixGR._trusted(tuple(tuple(self._rows[i][j] for j in cols) for i in rows), len(cols))

    def diagonal_entries(self) -> tuple[GaussianRational, ...]:
        return tuple(self._rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def with_entries(self, updates: dict) -> "MatrixGR":
        rows = [list(r) for r in self._rows]
        for (i, j), v in updates.items():
            rows[i][j] = as_gr(v)
        return MatrixGR._trusted(tuple(tuple(r) for r in rows), self.ncols)

    # -- algebra ---------------------------------------------------------

    def _check_same_shape(self, other: "MatrixGR") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "MatrixGR") -> "MatrixGR":
        self._check_same_shape(other)
        return MatrixGR._trusted(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self.ncols,
        )

    def __sub__(self, other: "MatrixGR") -> "MatrixGR":
        self._check_same_shape(other)
        return MatrixGR._trusted(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self.ncols,
        )

    def __neg__(self) -> "MatrixGR":
        return MatrixGR._trusted(tuple(tuple(-a for a in r) for r in self._rows), self.ncols)

    def scale(self, s) -> "MatrixGR":
        s = as_gr(s)
        return MatrixGR._trusted(tuple(tuple(s * a for a in r) for r in self._rows), self.ncols)

    def __mul__(self, s):
        if isinstance(s, MatrixGR):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other: "MatrixGR") -> "MatrixGR":
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self._rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for c in cols:
                acc = ZERO
                for k, a in nz:
                    b = c[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return MatrixGR._trusted(tuple(out), other.ncols)

    def apply(self, v: Sequence) -> tuple[GaussianRational, ...]:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise ShapeError("vector length does not match matrix")
        v = [as_gr(x) for x in v]
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), ZERO) for r in self._rows)

    def transpose(self) -> "MatrixGR":
        return MatrixGR._trusted(tuple(zip(*self._rows)) if self.nrows else (), self.nrows)

    @property
    def T(self) -> "MatrixGR":
        return self.transpose()

    def trace(self) -> GaussianRational:
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        return sum((self._rows[i][i] for i in range(self.nrows)), ZERO)

    def is_zero(self) -> bool:
        return not any(x for r in self._rows for x in r)

    def commutator(self, other: "MatrixGR") -> "MatrixGR":
        return self @ other - other @ self

    def __eq__(self, other):
        if not isinstance(other, MatrixGR):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self._rows))
        return self._hash

    def __repr__(self):
        return f"MatrixGR({[[str(x) for x in r] for r in self._rows]})"


# ---------------------------------------------------------------------------
# fraction-free kernels over Z[i]


def _gaussian_integer_rows(m: MatrixGR) -> tuple[list[list[tuple[int, int]]], int]:
    """Scale each row to Gaussian integers; returns rows and the product of scales."""
    out = []
    total = 1
    for r in m.rows:
        d = 1
        for x in r:
            d = _lcm(d, x._d)
        total *= d
        out.append([(x._a * (d // x._d), x._b * (d // x._d)) for x in r])
    return out, total


def _bareiss(rows: list[list[tuple[int, int]]], ncols: int) -> tuple[int, int, tuple[int, int]]:
    """In-place fraction-free row echelon over Z[i].

    Returns ``(rank, swap_sign, last_pivot)``.  For a square full-rank input
    ``swap_sign * last_pivot`` is the determinant.
    """
    nrows = len(rows)
    pa, pb = 1, 0  # previous pivot
    r = 0
    sign = 1
    last = (1, 0)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != (0, 0):
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[piv], rows[r] = rows[r], rows[piv]
            sign = -sign
        va, vb = rows[r][c]
        prow = rows[r]
        pn = pa * pa + pb * pb
        for i in range(r + 1, nrows):
            row = rows[i]
            ma, mb = row[c]
            for j in range(c + 1, ncols):
                xa, xb = row[j]
                ya, yb = prow[j]
                # pivot * x - m * y
                na = va * xa - vb * xb - (ma * ya - mb * yb)
                nb = va * xb + vb * xa - (ma * yb + mb * ya)
                if pn != 1 or pb != 0 or pa != 1:
                    # exact division by previous pivot (pa + pb i)
                    qa, ra_ = divmod(na * pa + nb * pb, pn)
                    qb, rb_ = divmod(nb * pa - na * pb, pn)
                    if ra_ or rb_:
                        raise InternalInconsistencyError("inexact Bareiss division")
                    na, nb = qa, qb
                row[j] = (na, nb)
            row[c] = (0, 0)
        pa, pb = va, vb
        last = (va, vb)
        r += 1
    return r, sign, last


def matrix_rank(m: MatrixGR) -> int:
    """Exact rank by fraction-free elimination."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    rows, _ = _gaussian_integer_rows(m)
    rank, _, _ = _bareiss(rows, m.ncols)
    return rank


def determinant(m: MatrixGR) -> GaussianRational:
    if not m.is_square():
        raise ShapeError(f"determinant needs a square matrix, got {m.shape}")
    n = m.nrows
    if n == 0:
        return ONE
    rows, scale = _gaussian_integer_rows(m)
    rank, sign, (a, b) = _bareiss(rows, n)
    if rank < n:
        return ZERO
    return GaussianRational._raw(sign * a, sign * b, scale)


def _rref(m: MatrixGR) -> tuple[list[list[GaussianRational]], list[int]]:
    rows = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, m.nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv if x else x for x in rows[r]]
        for i in range(m.nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return rows, pivots


def kernel_basis(m: MatrixGR) -> list[tuple[GaussianRational, ...]]:
    """Basis of the right null space ``{v : m v = 0}``, one vector per free column."""
    rows, pivots = _rref(m)
    pivset = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = [ZERO] * m.ncols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def inverse(m: MatrixGR) -> MatrixGR:
    if not m.is_square():
        raise ShapeError("inverse of a non-square matrix")
    n = m.nrows
    aug = MatrixGR.from_blocks([[m, MatrixGR.identity(n)]])
    rows, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise DomainError("matrix is singular")
    return MatrixGR([r[n:] for r in rows[:n]])


def _gi_matmul(ar, ai, br, bi, n):
    """(ar + i ai)(br + i bi) for n x n integer matrices given as lists of lists."""
    btr = list(zip(*br))
    bti = list(zip(*bi))
    cr, ci = [], []
    for i in range(n):
        ra, ia = ar[i], ai[i]
        rowr, rowi = [], []
        for j in range(n):
            cbr, cbi = btr[j], bti[j]
            sr = si = 0
            for k in range(n):
                x, y, u, v = ra[k], ia[k], cbr[k], cbi[k]
                if (x or y) and (u or v):
                    sr += x * u - y * v
                    si += x * v + y * u
            rowr.append(sr)
            rowi.append(si)
        cr.append(rowr)
        ci.append(rowi)
    return cr, ci


def char_poly(m: MatrixGR) -> PolyGR:
    """``det(x I - m)`` by Faddeev-LeVerrier over Z[i].

    The matrix is scaled by a common denominator ``D`` so every intermediate
    is a Gaussian integer and the divisions by ``k`` are exact; coefficient
    ``j`` of the result is then ``c_j / D^(n-j)``.
    """
    if not m.is_square():
        raise ShapeError(f"char_poly needs a square matrix, got {m.shape}")
    n = m.nrows
    if n == 0:
        return PolyGR([1])
    D = 1
    for r in m.rows:
        for x in r:
            D = _lcm(D, x._d)
    Ar = [[x._a * (D // x._d) for x in r] for r in m.rows]
    Ai = [[x._b * (D // x._d) for x in r] for r in m.rows]
    c = [(0, 0)] * (n + 1)
    c[n] = (1, 0)
    Mr = [[0] * n for _ in range(n)]
    Mi = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        if k == 1:
            Mr = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            Mi = [[0] * n for _ in range(n)]
        else:
            Pr, Pi = _gi_matmul(Ar, Ai, Mr, Mi, n)
            ca, cb = c[n - k + 1]
            for i in range(n):
                Pr[i][i] += ca
                Pi[i][i] += cb
            Mr, Mi = Pr, Pi
        # c_{n-k} = -tr(A M_k) / k
        tr_r = tr_i = 0
        for i in range(n):
            ra, ia = Ar[i], Ai[i]
            for j in range(n):
                x, y, u, v = ra[j], ia[j], Mr[j][i], Mi[j][i]
                tr_r += x * u - y * v
                tr_i += x * v + y * u
        qa, rem_a = divmod(-tr_r, k)
        qb, rem_b = divmod(-tr_i, k)
        if rem_a or rem_b:
            raise InternalInconsistencyError("Faddeev-LeVerrier division not exact")
        c[n - k] = (qa, qb)
    return PolyGR(GaussianRational._raw(a, b, D ** (n - j)) for j, (a, b) in enumerate(c))


def poly_eval_matrix(poly: PolyGR, m: MatrixGR) -> MatrixGR:
    """Horner evaluation of a polynomial at a square matrix."""
    if not m.is_square():
        raise ShapeError("polynomial evaluation needs a square matrix")
    n = m.nrows
    acc = MatrixGR.zeros(n)
    ident = MatrixGR.identity(n)
    for c in reversed(poly.coeffs):
        acc = acc @ m + ident.scale(c)
    return acc


def trace_exterior_power(m: MatrixGR, k: int) -> GaussianRational:
    """``tr(wedge^k m)`` as the sum of principal k x k minors."""
    if not m.is_square():
        raise ShapeError("exterior power trace needs a square matrix")
    if k == 0:
        return ONE
    if k < 0 or k > m.nrows:
        return ZERO
    total = ZERO
    for idx in combinations(range(m.nrows), k):
        total = total + determinant(m.submatrix(idx, idx))
    return total


# ---------------------------------------------------------------------------
# wire form: [re_num, re_den, im_num, im_den] as decimal strings

_INT_TEXT = re.compile(r"^-?\d+$")


def scalar_to_wire(x) -> list[str]:
    x = as_gr(x)
    re_, im_ = x.re, x.im
    return [str(re_.numerator), str(re_.denominator), str(im_.numerator), str(im_.denominator)]


def scalar_from_wire(obj, where: str = "$") -> GaussianRational:
    if not isinstance(obj, list) or len(obj) != 4:
        raise ParseError(f"{where}: scalar must be a 4-array of integer strings")
    for k, s in enumerate(obj):
        if not isinstance(s, str) or not _INT_TEXT.match(s):
            raise ParseError(f"{where}[{k}]: expected a decimal integer string, got {s!r}")
    rn, rd, inum, idn = (int(s) for s in obj)
    if rd == 0 or idn == 0:
        raise ParseError(f"{where}: zero denominator")
    return GaussianRational(Fraction(rn, rd), Fraction(inum, idn))


def is_wire_scalar(obj) -> bool:
    return (
        isinstance(obj, list)
        and len(obj) == 4
        and all(isinstance(s, str) and _INT_TEXT.match(s) for s in obj)
    )


def matrix_to_wire(m: MatrixGR) -> list[list[list[str]]]:
    return [[scalar_to_wire(x) for x in r] for r in m.rows]


def matrix_from_wire(obj, where: str = "$") -> MatrixGR:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ParseError(f"{where}: matrix must be a list of rows")
    rows = [
        [scalar_from_wire(x, f"{where}[{i}][{j}]") for j, x in enumerate(r)]
        for i, r in enumerate(obj)
    ]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ParseError(f"{where}: ragged matrix")
    return MatrixGR(rows)
