"""Center, derived and lower central series, Killing form, radical and simplicity."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Sequence

from .algebra import GradedLieAlgebra
from .linalg import ONE, ZERO, Matrix, Scalar, Subspace, Vector, kernel, rank, span_closure


def unit(n: int, k: int) -> Vector:
    return tuple(ONE if t == k else ZERO for t in range(n))


def full_space(L: GradedLieAlgebra) -> Subspace:
    return span_closure([unit(L.dim, k) for k in range(L.dim)], L.dim)


def zero_space(L: GradedLieAlgebra) -> Subspace:
    return Subspace(L.dim)


def bracket_space(L: GradedLieAlgebra, U: Subspace, V: Subspace) -> Subspace:
    return span_closure([L.bracket(u, v) for u in U.basis for v in V.basis], L.dim)


def center(L: GradedLieAlgebra) -> Subspace:
    rows = [row for i in range(L.dim) for row in L.ad_basis(i)]
    return kernel(tuple(rows), L.dim)


def derived_algebra(L: GradedLieAlgebra) -> Subspace:
    return span_closure([c for i in range(L.dim) for j in range(i + 1, L.dim)
                         for c in [_basis_bracket(L, i, j)]], L.dim)


def _basis_bracket(L: GradedLieAlgebra, i: int, j: int) -> Vector:
    v = [ZERO] * L.dim
    for k, c in L.bracket_basis(i, j):
        v[k] = c
    return tuple(v)


def derived_series(L: GradedLieAlgebra) -> list[Subspace]:
    """[L, L^(1), L^(2), ...] ending at the first repeated term."""
    chain = [full_space(L)]
    for _ in range(L.dim + 1):
        nxt = bracket_space(L, chain[-1], chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return chain


def lower_central_series(L: GradedLieAlgebra) -> list[Subspace]:
    """[L, L^1, L^2, ...] with L^n = [L, L^(n-1)], ending at the first repeated term."""
    whole = full_space(L)
    chain = [whole]
    for _ in range(L.dim + 1):
        nxt = bracket_space(L, whole, chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return chain


def _index(chain: list[Subspace]) -> int | None:
    for m, s in enumerate(chain):
        if s.is_zero():
            return m
    return None


def nilindex(L: GradedLieAlgebra) -> int | None:
    """Least m with L^m = 0 (L^0 = L), or ``None`` if L is not nilpotent."""
    return _index(lower_central_series(L))


def solvindex(L: GradedLieAlgebra) -> int | None:
    return _index(derived_series(L))


def killing_form(L: GradedLieAlgebra) -> Matrix:
    ads = [L.ad_basis(i) for i in range(L.dim)]
    n = L.dim
    # sparse views: ad_a as list of (r, s, x); K_ab = sum_{r,s} ad_a[r][s] ad_b[s][r]
    nz = [[(r, s, x) for r, row in enumerate(a) for s, x in enumerate(row) if x] for a in ads]
    K = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            acc = ZERO
            adb = ads[b]
            for r, s, x in nz[a]:
                y = adb[s][r]
                if y:
                    acc = acc + x * y
            K[a][b] = K[b][a] = acc
    return tuple(tuple(r) for r in K)


def radical(L: GradedLieAlgebra, K: Matrix | None = None) -> Subspace:
    """Killing-orthogonal complement of the derived algebra (characteristic zero)."""
    if K is None:
        K = killing_form(L)
    D = derived_algebra(L)
    if D.is_zero():
        return full_space(L)
    rows = [tuple(sum((y[a] * K[a][b] for a in range(L.dim) if y[a]), ZERO) for b in range(L.dim))
            for y in D.basis]
    return kernel(tuple(rows), L.dim)


def is_semisimple(L: GradedLieAlgebra, K: Matrix | None = None) -> bool:
    if K is None:
        K = killing_form(L)
    return L.dim > 0 and rank(K) == L.dim


def ideal_generated(L: GradedLieAlgebra, vectors: Sequence[Vector], within: Subspace | None = None) -> Subspace:
    """Smallest subspace containing ``vectors`` stable under ad of ``within`` (default all of L)."""
    acting = within.basis if within is not None else [unit(L.dim, k) for k in range(L.dim)]
    W = span_closure(list(vectors), L.dim)
    while True:
        new = [L.bracket(s, w) for s in acting for w in W.basis]
        W2 = span_closure(list(W.basis) + new, L.dim)
        if W2 == W:
            return W
        W = W2


def is_ideal(L: GradedLieAlgebra, W: Subspace) -> bool:
    return all(W.contains(L.bracket(unit(L.dim, k), w)) for k in range(L.dim) for w in W.basis)


def is_subalgebra(L: GradedLieAlgebra, W: Subspace) -> bool:
    return all(W.contains(L.bracket(u, v)) for u, v in combinations(W.basis, 2))


def _lie_generators(L: GradedLieAlgebra) -> list[int]:
    """A few basis indices whose generated subalgebra is L."""
    gens: list[int] = []
    whole = full_space(L)
    current = zero_space(L)
    for k in range(L.dim):
        if current.contains(unit(L.dim, k)):
            continue
        gens.append(k)
        W = span_closure([unit(L.dim, g) for g in gens], L.dim)
        while True:
            W2 = W + bracket_space(L, W, W)
            if W2 == W:
                break
            W = W2
        current = W
        if current == whole:
            break
    return gens


def centroid_dimension(L: GradedLieAlgebra) -> int:
    """dim of {T in End(L) : T ad(x) = ad(x) T for all x}."""
    n = L.dim
    pivots: dict[int, dict[int, Scalar]] = {}
    for g in _lie_generators(L):
        A = L.ad_basis(g)
        for r in range(n):
            for s in range(n):
                # (T A - A T)_{rs} = sum_m T_rm A_ms - A_rm T_ms; unknown T_ab sits at a*n+b
                row: dict[int, Scalar] = {}
                for m in range(n):
                    x = A[m][s]
                    if x:
                        row[r * n + m] = row.get(r * n + m, ZERO) + x
                    y = A[r][m]
                    if y:
                        row[m * n + s] = row.get(m * n + s, ZERO) - y
                _insert_sparse(pivots, {k: v for k, v in row.items() if v})
    return n * n - len(pivots)


def _insert_sparse(pivots: dict[int, dict[int, Scalar]], row: dict[int, Scalar]) -> None:
    while row:
        c = min(row)
        p = pivots.get(c)
        if p is None:
            inv = row[c].inverse()
            pivots[c] = {k: v * inv for k, v in row.items()}
            return
        f = row[c]
        for k, v in p.items():
            nv = row.get(k, ZERO) - f * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)


def is_simple(L: GradedLieAlgebra, K: Matrix | None = None) -> bool:
    if not is_semisimple(L, K):
        return False
    whole = full_space(L)
    if any(ideal_generated(L, [unit(L.dim, k)]) != whole for k in range(L.dim)):
        return False
    return centroid_dimension(L) == 1


# Levi factor verification ------------------------------------------------------------


@dataclass(frozen=True)
class LeviCheck:
    levi: Subspace
    components: tuple
    complement_to_radical: bool
    subalgebra: bool
    semisimple: bool
    simple_ideals: tuple
    two_sl2: bool


def subalgebra_on(L: GradedLieAlgebra, idx: Sequence[int]) -> GradedLieAlgebra:
    """Subalgebra spanned by the basis vectors ``idx`` (must be closed)."""
    pos = {k: n for n, k in enumerate(idx)}
    br = {}
    for a, b in combinations(range(len(idx)), 2):
        out = {}
        for k, c in L.bracket_basis(idx[a], idx[b]):
            if k not in pos:
                raise ValueError("basis subset is not closed under the bracket")
            out[pos[k]] = c
        br[(a, b)] = out
    return GradedLieAlgebra([L.names[k] for k in idx], [L.degrees[k] for k in idx], br)


def levi_check(L: GradedLieAlgebra) -> LeviCheck:
    """Find a sum of homogeneous components complementing the radical and check it."""
    K = killing_form(L)
    R = radical(L, K)
    if R.is_zero():
        whole = full_space(L)
        return LeviCheck(whole, tuple(L.grading_support()), True, True, is_semisimple(L, K),
                         tuple(_simple_ideals(L)), False)
    target = L.dim - R.dim
    if not target:
        # solvable: the Levi factor is zero
        return LeviCheck(zero_space(L), (), True, True, True, (), False)
    degrees = L.grading_support()
    for size in range(1, len(degrees) + 1):
        for combo in combinations(degrees, size):
            idx = [k for k in range(L.dim) if L.degrees[k] in combo]
            if len(idx) != target:
                continue
            S = span_closure([unit(L.dim, k) for k in idx], L.dim)
            if (S + R).dim != L.dim or not is_subalgebra(L, S):
                continue
            sub = subalgebra_on(L, idx)
            if not is_semisimple(sub):
                continue
            ideals = tuple(_simple_ideals(sub))
            two = len(ideals) == 2 and all(I.dim == 3 for I in ideals)
            return LeviCheck(S, combo, True, True, True, ideals, two)
    raise ValueError("no homogeneous Levi complement found")


def _simple_ideals(L: GradedLieAlgebra) -> list[Subspace]:
    """Minimal ideals generated by single basis vectors, when they split L."""
    found: list[Subspace] = []
    for k in range(L.dim):
        I = ideal_generated(L, [unit(L.dim, k)])
        if I not in found:
            found.append(I)
    minimal = [I for I in found if not any(J != I and I.contains_subspace(J) for J in found)]
    return sorted(minimal, key=lambda s: [[x.sort_key() for x in b] for b in s.basis])


# profile ------------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantProfile:
    dim: int
    dim_center: int
    dim_derived: int
    nilindex: int | None
    solvindex: int | None
    is_abelian: bool
    is_nilpotent: bool
    is_solvable: bool
    is_semisimple: bool
    is_reductive: bool
    is_simple: bool
    dim_radical: int
    levi_dim: int
    lower_central_dims: tuple
    derived_dims: tuple

    @property
    def d_pair(self) -> tuple[int, int]:
        return (self.dim_center, self.dim_derived)

    def to_json(self) -> dict:
        d = asdict(self)
        d["nilindex"] = self.nilindex if self.nilindex is not None else "not nilpotent"
        d["solvindex"] = self.solvindex if self.solvindex is not None else "not solvable"
        d["lower_central_dims"] = list(self.lower_central_dims)
        d["derived_dims"] = list(self.derived_dims)
        d["d_pair"] = list(self.d_pair)
        return d


def profile(L: GradedLieAlgebra) -> InvariantProfile:
    Z = center(L)
    lcs = lower_central_series(L)
    ds = derived_series(L)
    K = killing_form(L)
    R = radical(L, K)
    ss = is_semisimple(L, K)
    nil = _index(lcs)
    solv = _index(ds)
    derived_dim = lcs[1].dim if len(lcs) > 1 else lcs[0].dim
    return InvariantProfile(
        dim=L.dim,
        dim_center=Z.dim,
        dim_derived=derived_dim,
        nilindex=nil,
        solvindex=solv,
        is_abelian=L.is_abelian(),
        is_nilpotent=nil is not None,
        is_solvable=solv is not None,
        is_semisimple=ss,
        is_reductive=R == Z,
        is_simple=ss and is_simple(L, K),
        dim_radical=R.dim,
        levi_dim=L.dim - R.dim,
        lower_central_dims=tuple(s.dim for s in lcs),
        derived_dims=tuple(s.dim for s in ds),
    )
