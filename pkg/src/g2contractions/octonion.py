"""Complex octonions in the basis {1, e1, ..., e7} and their derivations.

The product is e_i e_j = +-e_{i*j} with sign +1 exactly when (i, j, i*j) is a
cyclic rotation of one of the ordered lines in ``LINES``; e_i^2 = -1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import fano
from .linalg import ONE, ZERO, Matrix, Number, Scalar, is_zero_matrix, transpose, vector

LINES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 5),
    (5, 6, 7),
    (7, 4, 1),
    (1, 3, 6),
    (6, 4, 2),
    (2, 7, 3),
    (3, 4, 5),
)

DIM = 8

# names used in hand computations with the quaternion-doubling basis
ALIASES: dict[str, tuple[int, int]] = {
    "1": (1, 0),
    "i": (1, 1),
    "j": (1, 2),
    "l": (1, 3),
    "kl": (1, 4),
    "k": (1, 5),
    "il": (1, 6),
    "jl": (-1, 7),
}


def _cyclic(line: Sequence[int]) -> set[tuple[int, int, int]]:
    a, b, c = line
    return {(a, b, c), (b, c, a), (c, a, b)}


_POSITIVE = set().union(*(_cyclic(ln) for ln in LINES))


def sign(i: int, j: int) -> int:
    """+1 or -1 with e_i e_j = sign(i, j) e_{i*j}, for distinct i, j in 1..7."""
    k = fano.star(i, j)
    return 1 if (i, j, k) in _POSITIVE else -1


@lru_cache(maxsize=None)
def _table() -> tuple[tuple[tuple[int, int], ...], ...]:
    # _table()[a][b] = (s, c) meaning e_a e_b = s e_c, with index 0 the unit
    rows = []
    for a in range(DIM):
        row = []
        for b in range(DIM):
            if a == 0:
                row.append((1, b))
            elif b == 0:
                row.append((1, a))
            elif a == b:
                row.append((-1, 0))
            else:
                row.append((sign(a, b), fano.star(a, b)))
        rows.append(tuple(row))
    return tuple(rows)


class Octonion(tuple):
    """Coordinates over (1, e1, ..., e7)."""

    def __new__(cls, coords: Sequence[Number]):
        c = vector(coords)
        if len(c) != DIM:
            raise ValueError("an octonion has 8 coordinates")
        return super().__new__(cls, c)

    @classmethod
    def basis(cls, n: int, coeff: Number = 1) -> "Octonion":
        c = [0] * DIM
        c[n] = coeff
        return cls(c)

    @classmethod
    def alias(cls, name: str) -> "Octonion":
        """Octonion named in the i, j, k, l notation (``jl`` is ``-e7``)."""
        try:
            s, n = ALIASES[name]
        except KeyError:
            raise ValueError(f"unknown octonion alias {name!r}") from None
        return cls.basis(n, s)

    def __add__(self, other):
        return Octonion([a + b for a, b in zip(self, other)])

    def __sub__(self, other):
        return Octonion([a - b for a, b in zip(self, other)])

    def __neg__(self):
        return Octonion([-a for a in self])

    def scale(self, c: Number) -> "Octonion":
        c = Scalar.coerce(c)
        return Octonion([c * a for a in self])

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return mul(self, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return all(not a for a in self)

    def __repr__(self):
        terms = [f"({a})*{'1' if n == 0 else f'e{n}'}" for n, a in enumerate(self) if a]
        return "Octonion(" + (" + ".join(terms) or "0") + ")"


E = tuple(Octonion.basis(n) for n in range(DIM))


def mul(x: Sequence[Scalar], y: Sequence[Scalar]) -> Octonion:
    tab = _table()
    out = [ZERO] * DIM
    for a, xa in enumerate(x):
        if not xa:
            continue
        row = tab[a]
        for b, yb in enumerate(y):
            if yb:
                s, c = row[b]
                p = xa * yb
                out[c] = out[c] + p if s > 0 else out[c] - p
    return Octonion(out)


def conj(x: Sequence[Scalar]) -> Octonion:
    return Octonion([x[0]] + [-a for a in x[1:]])


def trace(x: Sequence[Scalar]) -> Scalar:
    """t(x), the coefficient of 1 in x + conj(x)."""
    return x[0] + x[0]


def norm(x: Sequence[Scalar]) -> Scalar:
    """n(x), the coefficient of 1 in x conj(x)."""
    acc = ZERO
    for a in x:
        acc = acc + a * a
    return acc


def commutator(x, y) -> Octonion:
    return mul(x, y) - mul(y, x)


def associator(x, y, z) -> Octonion:
    return mul(mul(x, y), z) - mul(x, mul(y, z))


def derivation_D_direct(x, y) -> Matrix:
    """Matrix of z -> [[x, y], z] - 3 (x, y, z); column n is the image of the n-th basis vector."""
    xy = commutator(x, y)
    cols = [commutator(xy, E[n]) - associator(x, y, E[n]).scale(3) for n in range(DIM)]
    return transpose(tuple(cols))


@lru_cache(maxsize=None)
def _basis_derivations() -> dict[tuple[int, int], tuple[tuple[int, int, Scalar], ...]]:
    """Nonzero entries (row, col, value) of D(e_a, e_b) for a < b."""
    out = {}
    for a in range(1, DIM):
        for b in range(a + 1, DIM):
            m = derivation_D_direct(E[a], E[b])
            out[(a, b)] = tuple((r, c, v) for r, row in enumerate(m) for c, v in enumerate(row) if v)
    return out


def derivation_D(x, y) -> Matrix:
    """D_{x,y}, expanded bilinearly over the cached D(e_a, e_b) (D is alternating and kills 1)."""
    x, y = Octonion(x), Octonion(y)
    acc = [[ZERO] * DIM for _ in range(DIM)]
    for (a, b), entries in _basis_derivations().items():
        c = x[a] * y[b] - x[b] * y[a]
        if c:
            for r, col, v in entries:
                acc[r][col] = acc[r][col] + c * v
    return tuple(tuple(r) for r in acc)


def apply(d: Matrix, x: Sequence[Scalar]) -> Octonion:
    return Octonion([sum((r * a for r, a in zip(row, x) if r and a), ZERO) for row in d])


def is_derivation(d: Matrix) -> bool:
    """Leibniz rule d(e_a e_b) = d(e_a) e_b + e_a d(e_b) on all 64 basis pairs."""
    images = [apply(d, E[n]) for n in range(DIM)]
    for a in range(DIM):
        for b in range(DIM):
            lhs = apply(d, mul(E[a], E[b]))
            rhs = mul(images[a], E[b]) + mul(E[a], images[b])
            if lhs != rhs:
                return False
    return True


def check_cyclic_identity(x, y, z) -> bool:
    """D_{x,yz} + D_{y,zx} + D_{z,xy} = 0."""
    total = [
        [a + b + c for a, b, c in zip(r1, r2, r3)]
        for r1, r2, r3 in zip(derivation_D(x, mul(y, z)), derivation_D(y, mul(z, x)), derivation_D(z, mul(x, y)))
    ]
    return is_zero_matrix(total)


def e(n: int) -> Octonion:
    return E[n]


__all__ = [
    "ALIASES", "DIM", "E", "LINES", "ONE", "Octonion", "apply", "associator", "check_cyclic_identity",
    "commutator", "conj", "derivation_D", "e", "is_derivation", "mul", "norm", "sign", "trace",
]
