"""g2 as the derivation algebra of the octonions, with its Z2^3-grading.

The homogeneous component of degree g_i is spanned by the D(e_a, e_b) with
a*b = i.  Each component gets a basis (x_i, y_i) = (E, F) built from the
subquaternion algebra on a line through i and a point k off that line:

    E(q) = 0,               E(q e_k) = 1/2 (e_i q) e_k
    F(q) = 1/2 [e_i, q],    F(q e_k) = -1/2 (q e_i) e_k

for q in span{1, e_i, e_j, e_{i*j}}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import fano
from .algebra import GradedLieAlgebra
from .linalg import (
    ONE,
    ZERO,
    Matrix,
    Scalar,
    Subspace,
    Vector,
    _rref_rows,
    commutator,
    flatten,
    mat_scale,
    quadratic_roots,
    span_closure,
    transpose,
    vector,
)
from .octonion import DIM, E, LINES, Octonion, derivation_D, mul

HALF = Scalar(Fraction(1, 2))
QUARTER = Scalar(Fraction(1, 4))


def canonical_line(line: Sequence[int]) -> tuple[int, int, int]:
    """The member of LINES that ``line`` is a cyclic rotation of."""
    t = tuple(line)
    for ln in LINES:
        if t in {ln, ln[1:] + ln[:1], ln[2:] + ln[:2]}:
            return ln
    raise ValueError(f"{t} is not an ordered line of the sign table")


@dataclass(frozen=True)
class ComponentBasis:
    index: int
    line: tuple[int, int, int]
    k_choice: int
    E: Matrix
    F: Matrix


def _from_images(images: Sequence[Octonion]) -> Matrix:
    return transpose(tuple(tuple(v) for v in images))


@lru_cache(maxsize=None)
def component_basis(i: int, line: tuple[int, int, int], k: int) -> ComponentBasis:
    line = canonical_line(line)
    if i not in line or k in line or k not in fano.INDICES:
        raise ValueError(f"need i on the line and k off it, got i={i}, line={line}, k={k}")
    j = next(t for t in line if t != i)
    quat = [0, i, j, fano.star(i, j)]
    ei, ek = E[i], E[k]
    e_img: list[Octonion | None] = [None] * DIM
    f_img: list[Octonion | None] = [None] * DIM
    zero = Octonion([0] * DIM)
    for q in quat:
        eq = E[q]
        e_img[q] = zero
        f_img[q] = (mul(ei, eq) - mul(eq, ei)).scale(HALF)
        # q e_k = s e_m, so e_m = s (q e_k)
        qk = mul(eq, ek)
        m = next(n for n in range(DIM) if qk[n])
        s = qk[m]
        e_img[m] = mul(mul(ei, eq), ek).scale(HALF * s)
        f_img[m] = mul(mul(eq, ei), ek).scale(-HALF * s)
    Em, Fm = _from_images(e_img), _from_images(f_img)
    for jj in (t for t in line if t != i):
        alt = mat_scale(QUARTER, derivation_D(E[jj], mul(E[i], E[jj])))
        if alt != Fm:
            raise AssertionError(f"F for index {i} on {line} disagrees with D(e{jj}, e{i}e{jj})/4")
    return ComponentBasis(i, line, k, Em, Fm)


def default_frame(i: int) -> tuple[tuple[int, int, int], int]:
    """Lexicographically first line of LINES through i and the smallest point off it."""
    line = min(ln for ln in LINES if i in ln)
    k = min(t for t in fano.INDICES if t not in line)
    return line, k


def basis_name(n: int) -> str:
    return f"{'xy'[n % 2]}{n // 2 + 1}"


def basis_position(kind: str, i: int) -> int:
    """Coordinate of x_i (kind ``"x"``) or y_i (kind ``"y"``)."""
    return 2 * (i - 1) + (0 if kind == "x" else 1)


def component_slice(i: int) -> tuple[int, int]:
    return (2 * (i - 1), 2 * (i - 1) + 1)


class Coordinatizer:
    """Coordinates of vectors in the span of a fixed independent list."""

    def __init__(self, basis: Sequence[Vector]):
        n = len(basis)
        if not n:
            raise ValueError("empty basis")
        amb = len(basis[0])
        rows = [list(vector(b)) + [ONE if r == c else ZERO for c in range(n)] for r, b in enumerate(basis)]
        rows, pivots = _rref_rows(rows, amb + n)
        if len(pivots) < n or pivots[n - 1] >= amb:
            raise ValueError("basis vectors are linearly dependent")
        self.basis = tuple(tuple(b) for b in basis)
        self.pivots = tuple(pivots[:n])
        self.transition = tuple(tuple(r[amb:]) for r in rows[:n])

    def __call__(self, v: Vector) -> Vector:
        d = [v[p] for p in self.pivots]
        n = len(self.basis)
        c = [ZERO] * n
        for r, dr in enumerate(d):
            if dr:
                for s, x in enumerate(self.transition[r]):
                    if x:
                        c[s] = c[s] + dr * x
        rebuilt = [ZERO] * len(v)
        for s, cs in enumerate(c):
            if cs:
                for t, x in enumerate(self.basis[s]):
                    if x:
                        rebuilt[t] = rebuilt[t] + cs * x
        if tuple(rebuilt) != tuple(v):
            raise ValueError("vector does not lie in the span")
        return tuple(c)


def structure_constants(
    basis: Sequence[Matrix], degrees: Sequence[int], names: Sequence[str] | None = None
) -> GradedLieAlgebra:
    """Exact structure constants of the matrix Lie algebra spanned by ``basis``."""
    coords = Coordinatizer([flatten(m) for m in basis])
    n = len(basis)
    brackets = {}
    for a, b in combinations(range(n), 2):
        c = commutator(basis[a], basis[b])
        try:
            brackets[(a, b)] = {k: x for k, x in enumerate(coords(flatten(c))) if x}
        except ValueError:
            raise ValueError(f"bracket of basis elements {a}, {b} leaves the span") from None
    if names is None:
        names = [f"b{n}" for n in range(n)]
    return GradedLieAlgebra(names, degrees, brackets)


@dataclass(frozen=True)
class G2:
    """g2 together with its matrix realisation."""

    algebra: GradedLieAlgebra
    matrices: tuple[Matrix, ...]
    frames: tuple[ComponentBasis, ...]
    coords: Coordinatizer

    def to_matrix(self, v: Vector) -> Matrix:
        acc = [[ZERO] * DIM for _ in range(DIM)]
        for c, m in zip(v, self.matrices):
            if c:
                for r in range(DIM):
                    for s in range(DIM):
                        if m[r][s]:
                            acc[r][s] = acc[r][s] + c * m[r][s]
        return tuple(tuple(r) for r in acc)

    def coordinates(self, m: Matrix) -> Vector:
        return self.coords(flatten(m))

    def component(self, i: int) -> Subspace:
        a, b = component_slice(i)
        n = self.algebra.dim
        return span_closure([tuple(ONE if t == p else ZERO for t in range(n)) for p in (a, b)], n)


def derivation_span() -> Subspace:
    return span_closure([flatten(derivation_D(E[a], E[b])) for a, b in combinations(range(1, DIM), 2)], DIM * DIM)


def homogeneous_span(i: int) -> Subspace:
    """span{D(e_a, e_b) : a*b = i}, including D(1, e_i) = 0."""
    vecs = [flatten(derivation_D(E[a], E[b])) for a, b in combinations(range(DIM), 2)
            if a and fano.star(a, b) == i]
    return span_closure(vecs, DIM * DIM)


@lru_cache(maxsize=None)
def build_g2() -> G2:
    full = derivation_span()
    if full.dim != 14:
        raise AssertionError(f"derivation span has dimension {full.dim}, expected 14")
    frames, mats, degs = [], [], []
    for i in fano.INDICES:
        comp = homogeneous_span(i)
        if comp.dim != 2:
            raise AssertionError(f"component {i} has dimension {comp.dim}, expected 2")
        fr = component_basis(i, *default_frame(i))
        if not (comp.contains(flatten(fr.E)) and comp.contains(flatten(fr.F))):
            raise AssertionError(f"E or F for index {i} is not homogeneous")
        frames.append(fr)
        mats += [fr.E, fr.F]
        degs += [fano.ELEMENT[i]] * 2
    if span_closure([flatten(m) for m in mats], DIM * DIM) != full:
        raise AssertionError("the E/F basis does not span the derivations")
    names = [basis_name(n) for n in range(14)]
    alg = structure_constants(mats, degs, names)
    coords = Coordinatizer([flatten(m) for m in mats])
    return G2(alg, tuple(mats), tuple(frames), coords)


def g2_algebra() -> GradedLieAlgebra:
    return build_g2().algebra


def element(a, b, i: int, line: Sequence[int] | None = None, k: int | None = None) -> Vector:
    """Coordinates of a E + b F for the frame (line, k) of component i."""
    if line is None:
        line, k = default_frame(i)
    fr = component_basis(i, tuple(line), k)
    g = build_g2()
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    m = tuple(tuple(a * x + b * y for x, y in zip(rx, ry)) for rx, ry in zip(fr.E, fr.F))
    return g.coordinates(m)


def ad_square_spectrum(
    a, b, i: int, j: int, line: Sequence[int] | None = None, k: int | None = None,
    algebra: GradedLieAlgebra | None = None,
) -> tuple[Scalar, Scalar]:
    """Eigenvalues of ad(aE + bF)^2 on the component j, for E, F the frame of component i.

    ``algebra`` may be any contraction of g2 on the same basis.
    """
    if line is None:
        line, k = default_frame(i)
    line = canonical_line(line)
    if i not in line:
        raise ValueError(f"{i} is not on the line {line}")
    if j == i or j not in line:
        raise ValueError(f"j={j} must be a different point of the line {line}")
    L = algebra if algebra is not None else g2_algebra()
    z = element(a, b, i, line, k)
    p = component_slice(j)
    block = []
    for col in p:
        unit = tuple(ONE if t == col else ZERO for t in range(L.dim))
        w = L.bracket(z, L.bracket(z, unit))
        if any(w[t] for t in range(L.dim) if t not in p):
            raise AssertionError("ad(z)^2 does not preserve the component")
        block.append((w[p[0]], w[p[1]]))
    (m00, m10), (m01, m11) = block
    tr = m00 + m11
    dt = m00 * m11 - m01 * m10
    roots = quadratic_roots(-tr, dt)
    if roots is None:
        raise ValueError("characteristic polynomial does not split over Q(i)")
    return tuple(sorted(roots, key=Scalar.sort_key))
