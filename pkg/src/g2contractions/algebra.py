"""Finite-dimensional Lie algebras given by structure constants, graded by Z2^n."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .linalg import ZERO, Matrix, Scalar, Vector, transpose, zero_vector

Entry = tuple[int, int, int, Scalar]


class GradedLieAlgebra:
    """Basis b_0..b_{n-1}, a degree per basis vector and ``[b_i, b_j] = sum_k c^k_ij b_k``.

    Degrees are elements of an elementary abelian 2-group encoded as bit
    masks, so the degree of a bracket is the XOR of the degrees.  Only
    pairs i < j are supplied; antisymmetry fills in the rest.
    """

    __slots__ = ("names", "degrees", "_table", "_ad")

    def __init__(
        self,
        names: Sequence[str],
        degrees: Sequence[int],
        brackets: Mapping[tuple[int, int], Mapping[int, Scalar]],
        *,
        check_grading: bool = True,
    ):
        if len(names) != len(degrees):
            raise ValueError("one degree per basis vector")
        n = len(names)
        table: dict[tuple[int, int], tuple[tuple[int, Scalar], ...]] = {}
        for (i, j), out in brackets.items():
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"bad bracket index pair {(i, j)}")
            terms = tuple((k, Scalar.coerce(c)) for k, c in sorted(out.items()) if c)
            if not terms:
                continue
            if i > j:
                i, j = j, i
                terms = tuple((k, -c) for k, c in terms)
            if (i, j) in table:
                raise ValueError(f"bracket {(i, j)} given twice")
            if check_grading:
                for k, _ in terms:
                    if degrees[k] != degrees[i] ^ degrees[j]:
                        raise ValueError(f"[b{i}, b{j}] has a term b{k} of the wrong degree")
            table[(i, j)] = terms
            table[(j, i)] = tuple((k, -c) for k, c in terms)
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "degrees", tuple(degrees))
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_ad", {})

    def __setattr__(self, name, value):
        raise AttributeError("GradedLieAlgebra is immutable")

    @property
    def dim(self) -> int:
        return len(self.names)

    def bracket_basis(self, i: int, j: int) -> tuple[tuple[int, Scalar], ...]:
        return self._table.get((i, j), ())

    def structure_constant(self, i: int, j: int, k: int) -> Scalar:
        for kk, c in self._table.get((i, j), ()):
            if kk == k:
                return c
        return ZERO

    def bracket(self, u: Vector, v: Vector) -> Vector:
        out = list(zero_vector(self.dim))
        nu = [(i, a) for i, a in enumerate(u) if a]
        nv = [(j, b) for j, b in enumerate(v) if b]
        for i, a in nu:
            for j, b in nv:
                terms = self._table.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def ad_basis(self, i: int) -> Matrix:
        """Matrix of ad(b_i); column j holds the coordinates of [b_i, b_j]."""
        cached = self._ad.get(i)
        if cached is None:
            cols = []
            for j in range(self.dim):
                col = [ZERO] * self.dim
                for k, c in self._table.get((i, j), ()):
                    col[k] = c
                cols.append(tuple(col))
            cached = transpose(tuple(cols))
            self._ad[i] = cached
        return cached

    def ad(self, u: Vector) -> Matrix:
        n = self.dim
        acc = [[ZERO] * n for _ in range(n)]
        for i, a in enumerate(u):
            if a:
                for r, row in enumerate(self.ad_basis(i)):
                    for c, x in enumerate(row):
                        if x:
                            acc[r][c] = acc[r][c] + a * x
        return tuple(tuple(r) for r in acc)

    def entries(self) -> list[Entry]:
        """All nonzero c^k_ij over ordered pairs, sorted by (i, j, k)."""
        return sorted((i, j, k, c) for (i, j), terms in self._table.items() for k, c in terms)

    def structure_tensor(self) -> dict[tuple[int, int, int], Scalar]:
        return {(i, j, k): c for i, j, k, c in self.entries()}

    def is_abelian(self) -> bool:
        return not self._table

    def jacobi_witness(self) -> tuple[int, int, int] | None:
        """First basis triple violating the Jacobi identity, or ``None``."""
        n = self.dim
        tab = self._table
        for a, b, c in combinations(range(n), 3):
            acc: dict[int, Scalar] = {}
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                for m, s in tab.get((y, z), ()):
                    for k, t in tab.get((x, m), ()):
                        acc[k] = acc.get(k, ZERO) + s * t
            if any(v for v in acc.values()):
                return (a, b, c)
        return None

    def satisfies_jacobi(self) -> bool:
        return self.jacobi_witness() is None

    def component(self, g: int) -> list[int]:
        """Indices of the basis vectors of degree g."""
        return [n for n, d in enumerate(self.degrees) if d == g]

    def grading_support(self) -> list[int]:
        return sorted(set(self.degrees))

    def scaled(self, factor) -> "GradedLieAlgebra":
        """Algebra with bracket ``[b_i, b_j]' = factor(deg_i, deg_j) [b_i, b_j]``."""
        new: dict[tuple[int, int], dict[int, Scalar]] = {}
        for (i, j), terms in self._table.items():
            if i < j:
                f = Scalar.coerce(factor(self.degrees[i], self.degrees[j]))
                if f:
                    new[(i, j)] = {k: f * c for k, c in terms}
        return GradedLieAlgebra(self.names, self.degrees, new, check_grading=False)

    def __eq__(self, other):
        if not isinstance(other, GradedLieAlgebra):
            return NotImplemented
        return self.names == other.names and self.degrees == other.degrees and self._table == other._table

    def __hash__(self):
        return hash((self.names, self.degrees, tuple(self.entries())))

    def __repr__(self):
        return f"GradedLieAlgebra(dim={self.dim}, nonzero={len(self._table) // 2} pairs)"


def is_homomorphism(phi: Matrix, src: GradedLieAlgebra, dst: GradedLieAlgebra) -> bool:
    """phi([b_i, b_j]_src) = [phi b_i, phi b_j]_dst for all basis pairs; columns of phi are images."""
    cols = transpose(phi)
    for i in range(src.dim):
        for j in range(i + 1, src.dim):
            lhs = [ZERO] * dst.dim
            for k, c in src.bracket_basis(i, j):
                for r, x in enumerate(cols[k]):
                    if x:
                        lhs[r] = lhs[r] + c * x
            if tuple(lhs) != dst.bracket(cols[i], cols[j]):
                return False
    return True


def is_graded_map(phi: Matrix, src: GradedLieAlgebra, dst: GradedLieAlgebra) -> bool:
    cols = transpose(phi)
    degs = [
        {dst.degrees[r] for r, x in enumerate(col) if x}
        for col in cols
    ]
    return all(d <= {src.degrees[n]} for n, d in enumerate(degs))


def from_table(names: Sequence[str], degrees: Sequence[int], rows: Iterable[tuple[int, int, int, object]]):
    """Build from (i, j, k, c) rows with i < j."""
    br: dict[tuple[int, int], dict[int, Scalar]] = {}
    for i, j, k, c in rows:
        br.setdefault((i, j), {})[k] = Scalar.coerce(c) if not isinstance(c, str) else Scalar.parse(c)
    return GradedLieAlgebra(names, degrees, br)
