import random
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_fractions
from g2contractions import fano
from g2contractions.linalg import ONE, ZERO, Scalar, flatten, is_zero_matrix, mat_add, mat_scale, span_closure
from g2contractions.linalg import commutator as mcomm
from g2contractions.octonion import (
    ALIASES,
    DIM,
    E,
    LINES,
    Octonion,
    apply,
    associator,
    check_cyclic_identity,
    commutator,
    conj,
    derivation_D,
    derivation_D_direct,
    is_derivation,
    mul,
    norm,
    sign,
    trace,
)

octonions = st.lists(small_fractions, min_size=DIM, max_size=DIM).map(Octonion)


# independent oracle: Cayley-Dickson doubling of the quaternions
def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3, a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1, a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0)


def _qconj(a):
    return (a[0], -a[1], -a[2], -a[3])


def _cd_mul(x, y):
    # (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
    a, b, c, d = x[:4], x[4:], y[:4], y[4:]
    p = tuple(s - t for s, t in zip(_qmul(a, c), _qmul(_qconj(d), b)))
    q = tuple(s + t for s, t in zip(_qmul(d, a), _qmul(b, _qconj(c))))
    return p + q


_CD_SLOT = {"1": 0, "i": 1, "j": 2, "k": 3, "l": 4, "il": 5, "jl": 6, "kl": 7}


def test_sign_table_matches_cayley_dickson():
    img = {}
    for name, (s, n) in ALIASES.items():
        v = [0] * 8
        v[_CD_SLOT[name]] = s
        img[n] = tuple(v)
    for a in range(DIM):
        for b in range(DIM):
            p = mul(E[a], E[b])
            m = next(n for n in range(DIM) if p[n])
            assert _cd_mul(img[a], img[b]) == tuple(int(p[m].re) * x for x in img[m])


def test_basic_products():
    assert mul(E[1], E[2]) == E[5]
    assert mul(E[2], E[1]) == -E[5]
    assert mul(E[1], E[1]) == -E[0]
    assert commutator(E[1], E[2]) == E[5].scale(2)
    assert trace(E[0]) == Scalar(2)
    assert norm(E[0]) == ONE and norm(E[3]) == ONE


def test_sign_table_invariants():
    for ln in LINES:
        a, b, c = ln
        assert fano.is_line(a, b, c)
        assert sign(a, b) == sign(b, c) == sign(c, a) == 1
        assert sign(b, a) == -1
    assert sorted(tuple(sorted(ln)) for ln in LINES) == fano.lines()
    for i, j in combinations(fano.INDICES, 2):
        assert sign(i, j) == -sign(j, i)


def test_alias_names():
    assert Octonion.alias("jl") == -E[7]
    assert Octonion.alias("i") * Octonion.alias("j") == Octonion.alias("k")


@given(octonions, octonions)
def test_composition(x, y):
    assert norm(mul(x, y)) == norm(x) * norm(y)


@given(octonions, octonions)
def test_alternative(x, y):
    assert associator(x, x, y).is_zero()
    assert associator(x, y, y).is_zero()
    assert associator(x, y, x).is_zero()


@given(octonions, octonions, octonions)
def test_associator_alternating(x, y, z):
    assert associator(x, y, z) == -associator(y, x, z)
    assert associator(x, y, z) == associator(y, z, x)


@given(octonions, octonions)
def test_conjugation_antiautomorphism(x, y):
    assert conj(mul(x, y)) == mul(conj(y), conj(x))
    assert mul(x, conj(x)) == E[0].scale(norm(x))


def test_derivation_examples():
    assert is_zero_matrix(derivation_D(E[1], E[1]))
    assert apply(derivation_D(E[1], E[5]), E[1]) == E[5].scale(4)
    assert apply(derivation_D(E[2], E[3]), E[2]) == E[3].scale(4)
    assert is_zero_matrix(derivation_D(E[0], E[4]))


def test_bilinear_expansion_matches_direct_formula():
    rng = random.Random(7)
    for _ in range(20):
        x = Octonion([rng.randint(-3, 3) for _ in range(DIM)])
        y = Octonion([rng.randint(-3, 3) for _ in range(DIM)])
        assert derivation_D(x, y) == derivation_D_direct(x, y)


def test_derivations_span_fourteen():
    vecs = [flatten(derivation_D(E[a], E[b])) for a, b in combinations(range(1, DIM), 2)]
    assert span_closure(vecs, DIM * DIM).dim == 14


def test_every_basic_derivation_satisfies_leibniz():
    for a, b in combinations(range(DIM), 2):
        assert is_derivation(derivation_D(E[a], E[b]))


def test_non_derivation_rejected():
    ident = tuple(tuple(ONE if r == c else ZERO for c in range(DIM)) for r in range(DIM))
    assert not is_derivation(ident)


@settings(max_examples=30)
@given(octonions, octonions, octonions)
def test_cyclic_identity(x, y, z):
    assert check_cyclic_identity(x, y, z)


def test_jacobi_vectors():
    x, y, z = derivation_D(E[1], E[2]), derivation_D(E[2], E[3]), derivation_D(E[1], E[5])
    d35, d26 = derivation_D(E[3], E[5]), derivation_D(E[2], E[6])
    assert mcomm(y, mcomm(z, x)) == mat_add(mat_scale(-16, d35), mat_scale(-8, d26))
    assert mcomm(x, mcomm(y, z)) == mat_add(mat_scale(-8, d35), mat_scale(12, d26))
