"""Exact arithmetic over the Gaussian rationals and dense row reduction.

Everything here is immutable.  Matrices are tuples of row tuples and
vectors are plain tuples of :class:`Scalar`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction, "Scalar"]


class Scalar:
    """Element ``re + im*i`` of Q(i) with arbitrary-precision rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction] = 0):
        if isinstance(re, str):
            parsed = Scalar.parse(re)
            re, im = parsed.re, parsed.im
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def _make(re: Fraction, im: Fraction) -> "Scalar":
        s = object.__new__(Scalar)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        return s

    @staticmethod
    def coerce(x: Number) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar._make(Fraction(x), _ZERO_Q)
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact; build a Scalar")
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    @staticmethod
    def parse(text: str) -> "Scalar":
        """Parse ``"p/q"``, ``"p/q+r/s*i"``, ``"i"``, ``"-3*i"`` and similar forms."""
        t = text.strip().replace(" ", "")
        if not t:
            raise ValueError("empty scalar literal")
        try:
            if not t.endswith("i"):
                return Scalar._make(Fraction(_check_rat(t)), _ZERO_Q)
            body = t[:-1]
            if body.endswith("*"):
                body = body[:-1]
            cut = max(body.rfind("+"), body.rfind("-"))
            real, imag = (body[:cut], body[cut:]) if cut > 0 else ("", body)
            re_part = Fraction(_check_rat(real)) if real else _ZERO_Q
            if imag in ("", "+"):
                im_part = Fraction(1)
            elif imag == "-":
                im_part = Fraction(-1)
            else:
                im_part = Fraction(_check_rat(imag))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed scalar literal {text!r}") from None
        return Scalar._make(re_part, im_part)

    # arithmetic -----------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                return Scalar._make(self.re + other, self.im)
            return NotImplemented
        return Scalar._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                return Scalar._make(self.re - other, self.im)
            return NotImplemented
        return Scalar._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                return Scalar._make(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar._make(a * c, _ZERO_Q)
        return Scalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar._make(1 / a, _ZERO_Q)
        n = a * a + b * b
        return Scalar._make(a / n, -b / n)

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar._make(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def sqrt_exact(self) -> "Scalar | None":
        """A square root in Q(i) if one exists, else ``None``.

        The root returned has positive real part, or positive imaginary part
        when the real part vanishes.
        """
        a, b = self.re, self.im
        if not a and not b:
            return ZERO
        r = _sqrt_fraction(a * a + b * b)
        if r is None:
            return None
        x = _sqrt_fraction((a + r) / 2)
        if x is None:
            return None
        if x:
            y = b / (2 * x)
        else:
            y = _sqrt_fraction((r - a) / 2)
            if y is None:
                return None
        root = Scalar._make(x, y)
        if root * root != self:
            return None
        if root.re < 0 or (root.re == 0 and root.im < 0):
            root = -root
        return root

    # comparisons ----------------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """Total order used for canonical choices: real part, then imaginary part."""
        return (self.re, self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}*i"


_ZERO_Q = Fraction(0)
ZERO = Scalar._make(Fraction(0), Fraction(0))
ONE = Scalar._make(Fraction(1), Fraction(0))
I = Scalar._make(Fraction(0), Fraction(1))

_RAT_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def _check_rat(t: str) -> str:
    if not _RAT_RE.fullmatch(t):
        raise ValueError(t)
    return t


def _sqrt_fraction(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def S(x: Number | str) -> Scalar:
    """Shorthand constructor used throughout the package."""
    if isinstance(x, str):
        return Scalar.parse(x)
    return Scalar.coerce(x)


# vectors and matrices ---------------------------------------------------------------

Vector = tuple
Matrix = tuple


def vector(values: Iterable[Number]) -> Vector:
    return tuple(Scalar.coerce(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def matrix(rows: Iterable[Iterable[Number]]) -> Matrix:
    out = tuple(vector(r) for r in rows)
    if out and len({len(r) for r in out}) != 1:
        raise ValueError("ragged matrix")
    return out


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((ZERO,) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: Number, m: Matrix) -> Matrix:
    c = Scalar.coerce(c)
    return tuple(tuple(c * x for x in row) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != len(b):
        raise ValueError("dimension mismatch in matrix product")
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append(tuple(_dot_sparse(nz, col) for col in bt))
    return tuple(out)


def _dot_sparse(nz, col) -> Scalar:
    acc = ZERO
    for k, x in nz:
        y = col[k]
        if y:
            acc = acc + x * y
    return acc


def mat_vec(m: Matrix, v: Vector) -> Vector:
    nz = [(k, x) for k, x in enumerate(v) if x]
    return tuple(_dot_sparse(nz, row) for row in m)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def trace(m: Matrix) -> Scalar:
    acc = ZERO
    for i, row in enumerate(m):
        acc = acc + row[i]
    return acc


def is_zero_matrix(m: Matrix) -> bool:
    return all(not x for row in m for x in row)


def flatten(m: Matrix) -> Vector:
    return tuple(x for row in m for x in row)


# row reduction ----------------------------------------------------------------------


def _rref_rows(rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """In-place Gauss-Jordan on a list of mutable rows; returns (rows, pivots)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != ONE:
            inv = piv.inverse()
            rows[r] = [x * inv if x else x for x in rows[r]]
        prow = rows[r]
        support = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in support:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[int, Matrix]:
    """Reduced row-echelon form; returns ``(rank, reduced)`` with the same shape as ``m``."""
    nrows, ncols = shape(m)
    rows = [list(vector(r)) for r in m]
    rows, pivots = _rref_rows(rows, ncols)
    return len(pivots), tuple(tuple(r) for r in rows)


def rank(m: Matrix) -> int:
    return rref(m)[0]


class Subspace:
    """Subspace of K^n stored by its unique reduced row-echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Sequence[Vector] = (), *, _reduced: bool = False,
                 _pivots: Sequence[int] | None = None):
        if _reduced:
            rows, pivots = [tuple(b) for b in basis], list(_pivots or ())
        else:
            for b in basis:
                if len(b) != ambient_dim:
                    raise ValueError("dimension mismatch in subspace basis")
            work = [list(vector(b)) for b in basis]
            work, pivots = _rref_rows(work, ambient_dim)
            rows = [tuple(r) for r in work[: len(pivots)]]
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def coordinates(self, v: Vector) -> Vector | None:
        """Coordinates of ``v`` in the echelon basis, or ``None`` if ``v`` is outside."""
        coeffs = tuple(v[p] for p in self.pivots)
        rebuilt = list(zero_vector(self.ambient_dim))
        for c, b in zip(coeffs, self.basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        rebuilt[j] = rebuilt[j] + c * x
        if any(a != b for a, b in zip(rebuilt, v)):
            return None
        return coeffs

    def contains(self, v: Vector) -> bool:
        return self.coordinates(vector(v)) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("dimension mismatch")
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        # v = sum a_r b_r = sum c_s d_s  ->  kernel of [B^T | -D^T]
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("dimension mismatch")
        if not self.dim or not other.dim:
            return Subspace(self.ambient_dim)
        cols = list(self.basis) + [tuple(-x for x in d) for d in other.basis]
        ker = kernel(transpose(tuple(cols)))
        vecs = []
        for k in ker.basis:
            v = list(zero_vector(self.ambient_dim))
            for c, b in zip(k[: self.dim], self.basis):
                if c:
                    for j, x in enumerate(b):
                        if x:
                            v[j] = v[j] + c * x
            vecs.append(tuple(v))
        return Subspace(self.ambient_dim, vecs)

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim


def span_closure(vectors: Sequence[Vector], ambient_dim: int | None = None) -> Subspace:
    """Canonical subspace spanned by ``vectors``."""
    vectors = list(vectors)
    if ambient_dim is None:
        if not vectors:
            raise ValueError("ambient dimension needed for an empty vector list")
        ambient_dim = len(vectors[0])
    return Subspace(ambient_dim, vectors)


def kernel(m: Matrix, ncols: int | None = None) -> Subspace:
    """Right null space ``{v : m v = 0}``."""
    if ncols is None:
        ncols = shape(m)[1]
    rows = [list(vector(r)) for r in m]
    if any(len(r) != ncols for r in rows):
        raise ValueError("dimension mismatch")
    rows, pivots = _rref_rows(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            x = rows[r][f]
            if x:
                v[p] = -x
        basis.append(tuple(v))
    return Subspace(ncols, basis)


def solve(m: Matrix, b: Vector) -> Vector | None:
    """One solution of ``m x = b`` (free variables set to zero), or ``None``."""
    nrows, ncols = shape(m)
    rows = [list(vector(r)) + [Scalar.coerce(x)] for r, x in zip(m, b)]
    rows, pivots = _rref_rows(rows, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][ncols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    n, c = shape(m)
    if n != c:
        raise ValueError("inverse of a non-square matrix")
    rows = [list(vector(r)) + list(e) for r, e in zip(m, identity(n))]
    rows, pivots = _rref_rows(rows, 2 * n)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(r[n:]) for r in rows)


def det(m: Matrix) -> Scalar:
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    rows = [list(vector(r)) for r in m]
    out = ONE
    for col in range(n):
        p = next((i for i in range(col, n) if rows[i][col]), None)
        if p is None:
            return ZERO
        if p != col:
            rows[col], rows[p] = rows[p], rows[col]
            out = -out
        piv = rows[col][col]
        out = out * piv
        inv = piv.inverse()
        for i in range(col + 1, n):
            f = rows[i][col]
            if f:
                f = f * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return out


def quadratic_roots(b: Scalar, c: Scalar) -> tuple[Scalar, Scalar] | None:
    """Exact roots of ``t^2 + b t + c`` when the discriminant is a square in Q(i)."""
    disc = b * b - 4 * c
    r = disc.sqrt_exact()
    if r is None:
        return None
    return ((-b + r) / 2, (-b - r) / 2)
