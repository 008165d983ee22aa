"""Small Z2^2-graded examples separating the three equivalence relations.

Degrees are bit masks: h0 = 0, h1 = (1,0) = 1, h2 = (1,1) = 3, h3 = (0,1) = 2.
Every stated fact is recomputed, nothing is asserted by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import GradedLieAlgebra, is_homomorphism
from .contractions import ContractionMap, contract
from .invariants import center, nilindex, span_closure, unit
from .linalg import ONE, ZERO, Matrix, Scalar, det, transpose

H0, H1, H2, H3 = 0, 1, 3, 2
ORDER = 4


@dataclass(frozen=True)
class Fixture:
    name: str
    algebra: GradedLieAlgebra
    eps: ContractionMap
    eps_prime: ContractionMap
    facts: dict = field(default_factory=dict)  # fact name -> (expected, computed)

    @property
    def ok(self) -> bool:
        return all(exp == got for exp, got in self.facts.values())


def _symmetric(pairs: dict) -> ContractionMap:
    vals = {}
    for (g, h), v in pairs.items():
        vals[(g, h)] = vals[(h, g)] = v
    return ContractionMap(ORDER, vals)


def _images(n: int, images: dict[int, tuple[int, object]]) -> Matrix:
    """Matrix whose column a is c * b_t for images[a] = (t, c)."""
    cols = []
    for a in range(n):
        t, c = images[a]
        cols.append(tuple(Scalar.coerce(c) if r == t else ZERO for r in range(n)))
    return transpose(tuple(cols))


def is_lie_isomorphism(phi: Matrix, src: GradedLieAlgebra, dst: GradedLieAlgebra) -> bool:
    return bool(det(phi)) and is_homomorphism(phi, src, dst)


def component_map(phi: Matrix, src: GradedLieAlgebra, dst: GradedLieAlgebra) -> dict[int, int] | None:
    """g -> h with phi(src_g) = dst_h for every g in the support, or ``None``."""
    cols = transpose(phi)
    out = {}
    for g in src.grading_support():
        idx = src.component(g)
        targets = {dst.degrees[r] for a in idx for r, x in enumerate(cols[a]) if x}
        if len(targets) != 1:
            return None
        h = targets.pop()
        if len(dst.component(h)) != len(idx):
            return None
        out[g] = h
    return out


def component_is_central(L: GradedLieAlgebra, g: int) -> bool:
    Z = center(L)
    return all(Z.contains(unit(L.dim, k)) for k in L.component(g))


def component_equals_center(L: GradedLieAlgebra, g: int) -> bool:
    return center(L) == span_closure([unit(L.dim, k) for k in L.component(g)], L.dim)


def bracket_is(L: GradedLieAlgebra, i: int, j: int, expected: dict[int, object]) -> bool:
    got = dict(L.bracket_basis(i, j))
    return got == {k: Scalar.coerce(c) for k, c in expected.items()}


def forced_identity_scalars(L: GradedLieAlgebra, eps: ContractionMap, eps2: ContractionMap) -> set[Scalar]:
    """Values alpha_{h0} forced by phi = alpha_g id on each component being an iso L^eps -> L^eps2.

    A nonzero bracket [b_i, b_j] with deg b_i = h0 gives
    alpha_0 alpha_h eps2(0, h) = alpha_h eps(0, h), so alpha_0 = eps(0, h) / eps2(0, h)
    (or no solution at all when exactly one side vanishes).  Two different
    forced values rule out equivalence via normalization.
    """
    out: set[Scalar] = set()
    for i, j, _, _ in L.entries():
        if L.degrees[i] != 0:
            continue
        h = L.degrees[j]
        a, b = eps(0, h), eps2(0, h)
        if a and b:
            out.add(a / b)
        elif a or b:
            out.add(ZERO)  # alpha_0 would have to vanish
    return out


def _so3(with_center: bool) -> GradedLieAlgebra:
    names = ["x1", "x2", "x3"] + (["z"] if with_center else [])
    degrees = [H1, H2, H3] + ([H1] if with_center else [])
    br = {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}}
    return GradedLieAlgebra(names, degrees, br)


def _sl2_sum() -> GradedLieAlgebra:
    names = ["x1", "e1", "f1", "x2", "e2", "f2"]
    degrees = [H0, H1, H1, H0, H2, H2]
    br = {}
    for off in (0, 3):
        x, e, f = off, off + 1, off + 2
        br[(x, e)] = {e: 2}
        br[(x, f)] = {f: -2}
        br[(e, f)] = {x: 1}
    return GradedLieAlgebra(names, degrees, br)


def _cyclic_iso(n: int) -> Matrix:
    images = {0: (1, 1), 1: (2, 1), 2: (0, 1)}
    if n == 4:
        images[3] = (3, 1)
    return _images(n, images)


def so3_plus_center() -> Fixture:
    L = _so3(True)
    eps = _symmetric({(H1, H2): 1})
    eps2 = _symmetric({(H2, H3): 1})
    A, B = contract(L, eps), contract(L, eps2)
    phi = _cyclic_iso(4)
    # the two-dimensional components are the only candidates for each other
    two_dim_a = [g for g in A.grading_support() if len(A.component(g)) == 2]
    two_dim_b = [g for g in B.grading_support() if len(B.component(g)) == 2]
    facts = {
        "eps_is_contraction": (True, A.satisfies_jacobi()),
        "eps_prime_is_contraction": (True, B.satisfies_jacobi()),
        "[x1,x2]^eps = x3": (True, bracket_is(A, 0, 1, {2: 1})),
        "only nonzero bracket of L^eps": (1, len(A.entries()) // 2),
        "L^eps nilindex": (2, nilindex(A)),
        "[x2,x3]^eps' = x1": (True, bracket_is(B, 1, 2, {0: 1})),
        "x1 and z central in L^eps'": (True, component_is_central(B, H1)),
        "cyclic map is a Lie isomorphism": (True, is_lie_isomorphism(phi, A, B)),
        "unique 2-dim component": ((H1, H1), (tuple(two_dim_a) + tuple(two_dim_b))),
        "x1 central in L^eps": (False, component_is_central(A, H1)),
        # the obstruction: a component-permuting iso must send h1 to h1, and centrality differs
        "graded equivalent (obstruction decides)": (
            False, component_is_central(A, H1) == component_is_central(B, H1)),
    }
    return Fixture("so3_plus_center", L, eps, eps2, facts)


def so3_line_components() -> Fixture:
    L = _so3(False)
    eps = _symmetric({(H1, H2): 1})
    eps2 = _symmetric({(H2, H3): 1})
    A, B = contract(L, eps), contract(L, eps2)
    phi = _cyclic_iso(3)
    # scaling x1, x2 by 1/2 relates eps_12 = 1 and eps_12 = 4
    C = contract(L, _symmetric({(H1, H2): 4}))
    half = _images(3, {0: (0, Scalar.parse("1/2")), 1: (1, Scalar.parse("1/2")), 2: (2, 1)})
    facts = {
        "L^eps nilindex": (2, nilindex(A)),
        "x3 central in L^eps": (True, component_is_central(A, H3)),
        "cyclic map is a Lie isomorphism": (True, is_lie_isomorphism(phi, A, B)),
        "cyclic map permutes components": ({H1: H2, H2: H3, H3: H1}, component_map(phi, A, B)),
        "(L^eps)_h3 = centre": (True, component_equals_center(A, H3)),
        "(L^eps')_h3 = centre": (False, component_equals_center(B, H3)),
        "rescaling is a graded isomorphism": (True, is_lie_isomorphism(half, A, C)
                                              and component_map(half, A, C) == {H1: H1, H2: H2, H3: H3}),
        "rescaling is an automorphism of so3": (False, is_lie_isomorphism(half, L, L)),
    }
    return Fixture("so3_line_components", L, eps, eps2, facts)


def sl2_sum() -> Fixture:
    L = _sl2_sum()
    eps = ContractionMap(ORDER, lambda g, h: 1)
    eps2 = ContractionMap(ORDER, lambda g, h: -1 if {g, h} == {H0, H1} else 1)
    A, B = contract(L, eps), contract(L, eps2)
    phi = _images(6, {0: (0, -1), 1: (1, -1), 2: (2, 1), 3: (3, 1), 4: (4, 1), 5: (5, 1)})
    forced = forced_identity_scalars(L, eps, eps2)
    facts = {
        "L^eps = L": (True, A == L),
        "[x1,e1]^eps' = -2e1": (True, bracket_is(B, 0, 1, {1: -2})),
        "[x1,f1]^eps' = 2f1": (True, bracket_is(B, 0, 2, {2: 2})),
        "[e1,f1]^eps' = x1": (True, bracket_is(B, 1, 2, {0: 1})),
        "[x2,e2]^eps' = 2e2": (True, bracket_is(B, 3, 4, {4: 2})),
        "no brackets across the ideals": (True, all(not B.bracket_basis(a, b)
                                                     for a in range(3) for b in range(3, 6))),
        "phi is a graded isomorphism": (True, is_lie_isomorphism(phi, A, B)
                                        and component_map(phi, A, B) == {H0: H0, H1: H1, H2: H2}),
        "forced values of alpha_h0": ({Scalar.coerce(-1), ONE}, forced),
        "equivalent via normalization": (False, len(forced) == 1 and ZERO not in forced),
    }
    return Fixture("sl2_sum", L, eps, eps2, facts)


def fixture_examples() -> list[Fixture]:
    return [so3_plus_center(), so3_line_components(), sl2_sum()]
