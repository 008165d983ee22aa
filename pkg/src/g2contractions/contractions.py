"""Graded contractions of the Z2^3-grading on g2.

An admissible map eta assigns a scalar to each of the 21 Fano edges.  It
corresponds to the contraction eps with eps(g_i, g_j) = eta_{ij} for i != j
and eps = 0 whenever an argument is the identity or the two arguments agree.
eta gives a Lie algebra exactly when it lies in the set A of maps with
eta_ijk = eta_jki for all generating triplets, where eta_ijk = eta_{i,j*k} eta_jk.
"""

from __future__ import annotations

import cmath
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from . import fano, nice
from .algebra import GradedLieAlgebra, is_homomorphism
from .fano import EDGES, Collineation, edge_bit, star
from .g2 import build_g2, canonical_line, component_basis, g2_algebra
from .octonion import LINES
from .linalg import (
    I as IMAG,
    ONE,
    ZERO,
    Matrix,
    Scalar,
    _rref_rows,
    det,
    inverse,
    mat_mul,
    solve,
    transpose,
)

GROUP_ORDER = 8


class NotAGradedContraction(ValueError):
    """Raised when a contracted bracket violates antisymmetry or the Jacobi identity."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


# admissible maps ---------------------------------------------------------------------


class AdmissibleMap:
    """Values eta_t on the 21 edges, in the lexicographic edge order."""

    __slots__ = ("values",)

    def __init__(self, values: Sequence):
        vals = tuple(Scalar.coerce(v) if not isinstance(v, str) else Scalar.parse(v) for v in values)
        if len(vals) != len(EDGES):
            raise ValueError(f"an admissible map has {len(EDGES)} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("AdmissibleMap is immutable")

    @classmethod
    def zero(cls) -> "AdmissibleMap":
        return cls([0] * len(EDGES))

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, int], object]) -> "AdmissibleMap":
        vals = [ZERO] * len(EDGES)
        for (i, j), v in d.items():
            vals[edge_bit(i, j)] = v if not isinstance(v, str) else Scalar.parse(v)
        return cls(vals)

    @classmethod
    def from_support(cls, mask: int, values: Sequence | None = None) -> "AdmissibleMap":
        """Values given in the lexicographic order of the support; all ones by default."""
        bits = [n for n in range(len(EDGES)) if mask >> n & 1]
        if values is None:
            values = [1] * len(bits)
        if len(values) != len(bits):
            raise ValueError(f"support has {len(bits)} edges but {len(values)} values were given")
        vals = [ZERO] * len(EDGES)
        for n, v in zip(bits, values):
            s = v if not isinstance(v, str) else Scalar.parse(v)
            if not s:
                raise ValueError("values on the support must be nonzero")
            vals[n] = s
        return cls(vals)

    def __call__(self, i: int, j: int) -> Scalar:
        if i == j:
            return ZERO
        return self.values[edge_bit(i, j)]

    def eta3(self, i: int, j: int, k: int) -> Scalar:
        """eta_ijk = eta_{i, j*k} eta_{jk}."""
        return self(i, star(j, k)) * self(j, k)

    @property
    def support(self) -> int:
        m = 0
        for n, v in enumerate(self.values):
            if v:
                m |= 1 << n
        return m

    def on_support(self) -> tuple[Scalar, ...]:
        return tuple(v for v in self.values if v)

    def __eq__(self, other):
        if not isinstance(other, AdmissibleMap):
            return NotImplemented
        return self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        inner = ", ".join(f"{a}{b}: {v}" for (a, b), v in zip(EDGES, self.values) if v)
        return f"AdmissibleMap({{{inner}}})"

    def to_json(self) -> list[dict]:
        return [{"edge": f"{a},{b}", "value": str(v)} for (a, b), v in zip(EDGES, self.values) if v]

    @classmethod
    def from_json(cls, entries: Iterable[Mapping]) -> "AdmissibleMap":
        d = {}
        for entry in entries:
            if not isinstance(entry, Mapping) or "edge" not in entry or "value" not in entry:
                raise ValueError(f"admissible-map entries need 'edge' and 'value': {entry!r}")
            e = fano.parse_edge(str(entry["edge"]))
            if e in d:
                raise ValueError(f"edge {e} given twice")
            d[e] = Scalar.parse(str(entry["value"]))
        return cls.from_dict(d)


def eta_T(mask: int) -> AdmissibleMap:
    """The indicator map of an edge set."""
    return AdmissibleMap.from_support(mask)


def failing_triplet(eta: AdmissibleMap) -> tuple[tuple[int, int, int], tuple[Scalar, Scalar, Scalar]] | None:
    """A generating triplet whose three rotations disagree, with the three values."""
    for i, j, k in fano.generating_triplets():
        vals = (eta.eta3(i, j, k), eta.eta3(j, k, i), eta.eta3(k, i, j))
        if not vals[0] == vals[1] == vals[2]:
            return (i, j, k), vals
    return None


def check_conditions_b(eta: AdmissibleMap) -> bool:
    """Membership in A.  Symmetry holds by construction of the edge encoding."""
    return failing_triplet(eta) is None


# contraction maps --------------------------------------------------------------------


class ContractionMap:
    """eps: G x G -> Q(i) for an elementary abelian 2-group G of the given order."""

    __slots__ = ("order", "values")

    def __init__(self, order: int, values: Mapping[tuple[int, int], object] | Callable[[int, int], object]):
        if order & (order - 1) or order < 1:
            raise ValueError("group order must be a power of two")
        if callable(values):
            table = tuple(tuple(Scalar.coerce(values(g, h)) for h in range(order)) for g in range(order))
        else:
            grid = [[ZERO] * order for _ in range(order)]
            for (g, h), v in values.items():
                grid[g][h] = Scalar.coerce(v) if not isinstance(v, str) else Scalar.parse(v)
            table = tuple(tuple(r) for r in grid)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "values", table)

    def __setattr__(self, name, value):
        raise AttributeError("ContractionMap is immutable")

    def __call__(self, g: int, h: int) -> Scalar:
        return self.values[g][h]

    def ternary(self, g: int, h: int, k: int) -> Scalar:
        """eps(g, h, k) = eps(g, h + k) eps(h, k)."""
        return self(g, h ^ k) * self(h, k)

    def is_admissible(self) -> bool:
        return all(not self(g, g) and not self(0, g) and not self(g, 0) for g in range(self.order))

    def is_symmetric(self) -> bool:
        return all(self(g, h) == self(h, g) for g in range(self.order) for h in range(self.order))

    def __eq__(self, other):
        if not isinstance(other, ContractionMap):
            return NotImplemented
        return self.order == other.order and self.values == other.values

    def __hash__(self):
        return hash((self.order, self.values))

    def __repr__(self):
        nz = {(g, h): str(v) for g, r in enumerate(self.values) for h, v in enumerate(r) if v}
        return f"ContractionMap(order={self.order}, {nz})"


def ones_off_diagonal(order: int = GROUP_ORDER) -> ContractionMap:
    return ContractionMap(order, lambda g, h: 1 if g and h and g != h else 0)


def phi(eps: ContractionMap) -> AdmissibleMap:
    """Phi(eps)({i, j}) = eps(g_i, g_j)."""
    if eps.order != GROUP_ORDER:
        raise ValueError("phi is defined for Z2^3-contractions")
    if not eps.is_admissible():
        raise ValueError("phi needs an admissible contraction map")
    for i, j in EDGES:
        gi, gj = fano.ELEMENT[i], fano.ELEMENT[j]
        if eps(gi, gj) != eps(gj, gi):
            raise ValueError(f"eps is not symmetric on ({i}, {j}); not a graded contraction")
    eta = AdmissibleMap([eps(fano.ELEMENT[i], fano.ELEMENT[j]) for i, j in EDGES])
    if not check_conditions_b(eta):
        raise ValueError("eps violates the cyclic condition on generating triplets; not a graded contraction")
    return eta


def phi_inv(eta: AdmissibleMap) -> ContractionMap:
    """eps(g_i, g_j) = eta_ij for {i, j} an edge, 0 on the diagonal and identity slots."""
    vals = {}
    for (i, j), v in zip(EDGES, eta.values):
        if v:
            gi, gj = fano.ELEMENT[i], fano.ELEMENT[j]
            vals[(gi, gj)] = v
            vals[(gj, gi)] = v
    return ContractionMap(GROUP_ORDER, vals)


def admissible_reduce(eps: ContractionMap) -> ContractionMap:
    """Zero the slots (g, g), (e, g), (g, e); the contracted bracket does not change."""
    return ContractionMap(eps.order, lambda g, h: eps(g, h) if g and h and g != h else 0)


def contracted_brackets(L: GradedLieAlgebra, eps: ContractionMap) -> dict[tuple[int, int, int], Scalar]:
    """The bilinear map eps(deg b_i, deg b_j) [b_i, b_j] as a tensor over ordered pairs."""
    out = {}
    for i, j, k, c in L.entries():
        v = eps(L.degrees[i], L.degrees[j]) * c
        if v:
            out[(i, j, k)] = v
    return out


def contract(L: GradedLieAlgebra, eps: ContractionMap) -> GradedLieAlgebra:
    """The contracted algebra L^eps, checked to be a Lie algebra."""
    for i, j, _, _ in L.entries():
        gi, gj = L.degrees[i], L.degrees[j]
        if eps(gi, gj) != eps(gj, gi):
            raise NotAGradedContraction(
                f"eps({gi}, {gj}) != eps({gj}, {gi}) on a nonzero bracket; antisymmetry fails", (i, j))
    out = L.scaled(eps)
    w = out.jacobi_witness()
    if w is not None:
        raise NotAGradedContraction(f"not a graded contraction: Jacobi fails on basis triple {w}", w)
    return out


def contraction_algebra(eta: AdmissibleMap) -> GradedLieAlgebra:
    return contract(g2_algebra(), phi_inv(eta))


# group actions -----------------------------------------------------------------------


def act_collineation(eta: AdmissibleMap, sigma: Collineation) -> AdmissibleMap:
    """eta^sigma_ij = eta_{sigma(i) sigma(j)}."""
    return AdmissibleMap([eta(sigma(i), sigma(j)) for i, j in EDGES])


def act_normalization(eta: AdmissibleMap, alpha: Sequence) -> AdmissibleMap:
    """eta^alpha_ij = eta_ij alpha_i alpha_j / alpha_{i*j}; alpha is indexed 1..7 via alpha[i-1]."""
    a = [Scalar.coerce(x) for x in alpha]
    if len(a) != 7:
        raise ValueError("alpha has one value per index 1..7")
    if any(not x for x in a):
        raise ValueError("normalization values must be nonzero")
    return AdmissibleMap([v * a[i - 1] * a[j - 1] / a[star(i, j) - 1] if v else ZERO
                          for (i, j), v in zip(EDGES, eta.values)])


def normalization_matrix(alpha: Sequence) -> Matrix:
    """Diagonal matrix of x -> alpha_{deg x} x on the g2 basis."""
    a = [Scalar.coerce(x) for x in alpha]
    diag = [a[n // 2] for n in range(14)]
    return tuple(tuple(diag[r] if r == c else ZERO for c in range(14)) for r in range(14))


def is_automorphism(theta: Matrix, L: GradedLieAlgebra) -> bool:
    return bool(det(theta)) and is_homomorphism(theta, L, L)


def is_isomorphism(theta: Matrix, src: GradedLieAlgebra, dst: GradedLieAlgebra) -> bool:
    return bool(det(theta)) and is_homomorphism(theta, src, dst)


def maps_components(theta: Matrix) -> dict[int, int] | None:
    """The permutation t -> t' with theta(lambda_t) = lambda_t', or ``None`` if theta is not graded."""
    cols = transpose(theta)
    perm = {}
    for t in fano.INDICES:
        targets = {r // 2 + 1 for c in (2 * (t - 1), 2 * (t - 1) + 1) for r, x in enumerate(cols[c]) if x}
        if len(targets) != 1:
            return None
        perm[t] = targets.pop()
    if sorted(perm.values()) != list(fano.INDICES):
        return None
    return perm


def adapted_frame(i: int, j: int) -> tuple[tuple[int, int, int], int]:
    line = canonical_line(next(ln for ln in LINES if i in ln and j in ln))
    k = min(t for t in fano.INDICES if t not in line)
    return line, k


def build_theta(i: int, j: int, ratio=1) -> Matrix:
    """theta_ij on the fixed g2 basis.

    On lambda_i + lambda_j + lambda_{i*j} it is written in the frame (E, F)
    attached to the line through i and j: x_i -> -ratio x_j, y_i -> -ratio y_j,
    x_j -> x_i, y_j -> y_i, identity on lambda_{i*j}.  Identity elsewhere.
    """
    if i == j:
        raise ValueError("theta needs two distinct indices")
    r = Scalar.coerce(ratio)
    if not r:
        raise ValueError("ratio must be nonzero")
    g = build_g2()
    line, k = adapted_frame(i, j)
    cols = [tuple(ONE if s == n else ZERO for s in range(14)) for n in range(14)]
    adapted = {}
    for t in (i, j, star(i, j)):
        fr = component_basis(t, line, k)
        adapted[t] = (g.coordinates(fr.E), g.coordinates(fr.F))
        cols[2 * (t - 1)], cols[2 * (t - 1) + 1] = adapted[t]
    P = transpose(tuple(cols))
    # theta in adapted coordinates: column n is the image of the n-th adapted vector
    th = [[ZERO] * 14 for _ in range(14)]
    for n in range(14):
        th[n][n] = ONE
    xi, yi, xj, yj = 2 * (i - 1), 2 * (i - 1) + 1, 2 * (j - 1), 2 * (j - 1) + 1
    for a in (xi, yi, xj, yj):
        th[a][a] = ZERO
    th[xj][xi] = -r
    th[yj][yi] = -r
    th[xi][xj] = ONE
    th[yi][yj] = ONE
    return mat_mul(mat_mul(P, tuple(tuple(row) for row in th)), inverse(P))


# normal forms ------------------------------------------------------------------------

PARAMETRIC = (14, 17, 20)


@dataclass(frozen=True)
class NormalizationWitness:
    """alpha with eta^alpha = target.  ``exact`` is False when floats were needed."""

    alpha: tuple
    exact: bool
    residual: float = 0.0
    float_note: str | None = None


@dataclass(frozen=True)
class NormalForm:
    class_id: int
    params: dict
    canonical: tuple
    witness: NormalizationWitness
    exact_target: bool = True


def _rows_for(mask: int) -> list[tuple[int, int, list[int]]]:
    out = []
    for n, (a, b) in enumerate(EDGES):
        if mask >> n & 1:
            row = [0] * 7
            row[a - 1] += 1
            row[b - 1] += 1
            row[star(a, b) - 1] -= 1
            out.append((a, b, row))
    return out


def _independent_rows(rows: list[list[int]]) -> list[int]:
    keep: list[int] = []
    basis: list[list[Scalar]] = []
    for n, r in enumerate(rows):
        trial = [list(map(Scalar.coerce, x)) for x in basis] + [list(map(Scalar.coerce, r))]
        _, piv = _rref_rows(trial, 7)
        if len(piv) > len(basis):
            keep.append(n)
            basis.append(r)
    return keep


def _root_2power(x: Scalar, q: int) -> Scalar | None:
    """An exact q-th root for q a power of two, or ``None``."""
    if q & (q - 1):
        return None
    r = x
    while q > 1:
        r = r.sqrt_exact()
        if r is None:
            return None
        q //= 2
    return r


def _unit_roots(n: int):
    return [ONE, -ONE] if n == 2 else [ONE, IMAG, -ONE, -IMAG]


def find_normalization(eta: AdmissibleMap, target: Sequence) -> NormalizationWitness:
    """Find alpha with eta^alpha equal to ``target`` (values on the common support).

    Solves the multiplicative system alpha_a alpha_b / alpha_{a*b} = target_ab / eta_ab.
    When an integral exponent solution exists and the target is exact the
    witness is exact; otherwise complex powers are used and checked to 1e-9.
    """
    mask = eta.support
    rows = _rows_for(mask)
    if len(target) != len(rows):
        raise ValueError("target must list one value per support edge")
    exact_target = all(isinstance(t, (Scalar, int, Fraction)) for t in target)
    ratios = []
    for (a, b, _), t, v in zip(rows, target, eta.on_support()):
        ratios.append(Scalar.coerce(t) / v if exact_target else complex(t) / complex(v))
    keep = _independent_rows([r for _, _, r in rows])
    A = tuple(tuple(Scalar.coerce(x) for x in rows[n][2]) for n in keep)
    V = []  # V[col] = exponent vector of alpha solving A alpha = unit(col)
    for c in range(len(keep)):
        unit = tuple(ONE if s == c else ZERO for s in range(len(keep)))
        sol = solve(A, unit)
        if sol is None:
            raise AssertionError("independent rows must be solvable")
        V.append(sol)
    # alpha_i = prod_t rho_t^(q V[t][i]) with rho_t a fixed q-th root of the t-th ratio
    q = 1
    for col in V:
        for x in col:
            q = q * x.re.denominator // math.gcd(q, x.re.denominator)
    picked = [ratios[n] for n in keep]
    expo = [[int(col[idx].re * q) for idx in range(7)] for col in V]

    if exact_target:
        rho = [_root_2power(r, q) for r in picked]
        if all(x is not None for x in rho):
            alpha = [ONE] * 7
            for ex, r in zip(expo, rho):
                for idx in range(7):
                    if ex[idx]:
                        alpha[idx] = alpha[idx] * r ** ex[idx]
            want = tuple(Scalar.coerce(t) for t in target)
            for order in (2, 4):
                for beta in itertools.product(_unit_roots(order), repeat=7):
                    cand = [x * y for x, y in zip(alpha, beta)]
                    if act_normalization(eta, cand).on_support() == want:
                        return NormalizationWitness(tuple(cand), True)
            raise ValueError("no normalization found: target is not reachable from eta")

    rho_f = [cmath.exp(cmath.log(complex(r)) / q) for r in picked]
    alpha_f = [1 + 0j] * 7
    for ex, r in zip(expo, rho_f):
        for idx in range(7):
            if ex[idx]:
                alpha_f[idx] *= r ** ex[idx]
    tgt = [complex(t) for t in target]
    vals = [complex(v) for v in eta.on_support()]
    best = None
    for order in (2, 4):
        for beta in itertools.product([1, 1j, -1, -1j] if order == 4 else [1, -1], repeat=7):
            cand = [x * y for x, y in zip(alpha_f, beta)]
            res = max(abs(v * cand[a - 1] * cand[b - 1] / cand[star(a, b) - 1] - t)
                      for (a, b, _), v, t in zip(rows, vals, tgt)) if rows else 0.0
            if best is None or res < best[0]:
                best = (res, cand)
            if res < 1e-9:
                return NormalizationWitness(tuple(cand), False, res,
                                            "alpha involves square roots; checked in floating point")
    raise ValueError(f"no normalization found (best residual {best[0] if best else None})")


def _lambda_data(eta: AdmissibleMap) -> dict:
    r = (eta(1, 3) * eta(1, 6)) / (eta(1, 2) * eta(1, 5))
    out = {"ratio": r}
    if eta.support == nice.REPRESENTATIVES[20]:
        out["ratio2"] = (eta(1, 4) * eta(1, 7)) / (eta(1, 2) * eta(1, 5))
    return out


def _root(x: Scalar):
    r = x.sqrt_exact()
    return (r, True) if r is not None else (cmath.sqrt(complex(x)), False)


def normal_form(eta: AdmissibleMap) -> NormalForm:
    """Normal form of a map whose support is one of the class representatives."""
    mask = eta.support
    cid = next((c for c, rep in nice.REPRESENTATIVES.items() if rep == mask), None)
    if cid is None:
        raise ValueError("support is not one of the canonical representatives; apply canonical_rep first")
    if not check_conditions_b(eta):
        raise ValueError("eta is not in A")
    n = bin(mask).count("1")
    exact = True
    if cid == 14:
        lam = _lambda_data(eta)["ratio"]
        params = {"lambda": lam}
        target = (ONE, ONE, ONE, lam)
    elif cid == 17:
        lam2 = _lambda_data(eta)["ratio"]
        lam, exact = _root(lam2)
        params = {"lambda2": lam2}
        target = (ONE, lam, ONE, ONE, lam)
    elif cid == 20:
        d = _lambda_data(eta)
        lam2, mu2 = d["ratio"], d["ratio2"]
        lam, e1 = _root(lam2)
        mu, e2 = _root(mu2)
        exact = e1 and e2
        params = {"lambda2": lam2, "mu2": mu2}
        target = (ONE, lam, mu, ONE, lam, mu)
    else:
        params = {}
        target = (ONE,) * n
    witness = find_normalization(eta, target)
    return NormalForm(cid, params, tuple(target), witness, exact)


@dataclass(frozen=True, order=True)
class EquivClassLabel:
    class_id: int
    params: tuple = field(default=())

    def __str__(self):
        if not self.params:
            return f"T{self.class_id}"
        return f"T{self.class_id}(" + ", ".join(str(p) for p in self.params) + ")"

    def to_json(self) -> dict:
        return {"class_id": self.class_id, "params": [str(p) for p in self.params]}


def _key(x: Scalar):
    return x.sort_key()


def reduce_params(class_id: int, params: dict) -> tuple:
    """Canonical parameter tuple modulo the symmetries of each parametric family."""
    if class_id == 14:
        lam = params["lambda"]
        return (min((lam, ONE / lam), key=_key),)
    if class_id == 17:
        l2 = params["lambda2"]
        return (min((l2, ONE / l2), key=_key),)
    if class_id == 20:
        a, b = params["lambda2"], params["mu2"]
        cands = [(a, b), (ONE / a, b / a), (a / b, ONE / b)]
        sorted_pairs = [tuple(sorted(p, key=_key)) for p in cands]
        return min(sorted_pairs, key=lambda p: (_key(p[0]), _key(p[1])))
    return ()


def equivalence_label(eta: AdmissibleMap) -> EquivClassLabel:
    if not check_conditions_b(eta):
        raise ValueError("eta is not in A")
    cid, sigma = nice.canonical_rep(eta.support)
    moved = act_collineation(eta, sigma)
    if cid in PARAMETRIC:
        nf = normal_form(moved)
        return EquivClassLabel(cid, reduce_params(cid, nf.params))
    if cid == 10:
        return EquivClassLabel(8)
    return EquivClassLabel(cid)


def parse_eta_document(text: str) -> list[AdmissibleMap]:
    """Parse one map (a list of entries) or several (a list of such lists)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if isinstance(doc, dict) and "eta" in doc:
        doc = doc["eta"]
    if not isinstance(doc, list):
        raise ValueError("expected a list of {edge, value} entries or a list of such lists")
    if doc and all(isinstance(x, list) for x in doc):
        return [AdmissibleMap.from_json(x) for x in doc]
    return [AdmissibleMap.from_json(doc)]


from .fixtures import fixture_examples  # noqa: E402  (fixtures build on the names above)
