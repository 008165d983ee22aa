import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import alphas, indices, nonzero_fractions
from g2contractions import fano
from g2contractions.contractions import AdmissibleMap, act_normalization, contraction_algebra
from g2contractions.g2 import (
    HALF,
    ad_square_spectrum,
    build_g2,
    component_basis,
    default_frame,
    g2_algebra,
    homogeneous_span,
)
from g2contractions.invariants import killing_form
from g2contractions.linalg import Scalar, kernel, mat_add, mat_mul, mat_scale, span_closure, trace
from g2contractions.linalg import commutator as mcomm
from g2contractions.octonion import DIM, LINES, is_derivation


@pytest.fixture(scope="module")
def g():
    return build_g2()


def test_dimension_and_jacobi(g):
    assert g.algebra.dim == 14
    assert g.algebra.satisfies_jacobi()
    assert all(is_derivation(m) for m in g.matrices)


def test_killing_form_is_four_times_trace_form(g):
    # an independent normalisation: the Killing form of g2 is 4 tr(xy) on the 7-dim module
    K = killing_form(g.algebra)
    for a in range(14):
        for b in range(14):
            assert K[a][b] == Scalar(4) * trace(mat_mul(g.matrices[a], g.matrices[b]))


def test_killing_form_negative_definite(g):
    # the real span of the octonion derivations is the compact form
    K = np.array([[float(x.re) for x in row] for row in killing_form(g.algebra)])
    assert np.linalg.eigvalsh(K).max() < 0


def test_nonzero_bracket_pairs_regression(g):
    # 21 component pairs times 4 basis pairs, 8 of which vanish in the default frames
    pairs = {(i, j) for i, j, _, _ in g.algebra.entries() if i < j}
    assert len(pairs) == 76


def test_components(g):
    L = g.algebra
    for i in fano.INDICES:
        assert homogeneous_span(i).dim == 2
        a, b = 2 * (i - 1), 2 * i - 1
        assert not L.bracket_basis(a, b)
        outside = [r for r in range(14) if r not in (a, b)]
        rows = [tuple(L.ad_basis(p)[r]) for p in (a, b) for r in outside]
        assert kernel(tuple(rows), 14) == g.component(i)


def test_component_products(g):
    L = g.algebra
    for i, j in combinations(fano.INDICES, 2):
        got = span_closure([L.bracket(u, v) for u in g.component(i).basis for v in g.component(j).basis], 14)
        assert got == g.component(fano.star(i, j))


def test_line_brackets_with_shared_frame():
    fr = {t: component_basis(t, (1, 2, 5), 3) for t in (1, 2, 5)}
    for s, t in ((1, 2), (2, 5), (5, 1)):
        u = fr[fano.star(s, t)]
        assert mcomm(fr[s].E, fr[t].E) == u.E
        assert mcomm(fr[s].F, fr[t].F) == u.F
        assert not any(any(r) for r in mcomm(fr[s].E, fr[t].F))


def test_second_frame_relations():
    e, f = component_basis(1, (1, 2, 5), 3).E, component_basis(1, (1, 2, 5), 3).F
    other = component_basis(1, (1, 3, 6), 2)
    assert other.E == mat_scale(HALF, mat_add(e, f))
    assert other.F == mat_scale(HALF, mat_add(mat_scale(3, e), mat_scale(-1, f)))


def test_change_of_basis_table_up_to_half():
    # d(e_i) = alpha e_{sigma(i)}, sigma = (25)(36)(47); the alphas are half the integer pattern
    sigma = {1: 1, 2: 5, 3: 6, 4: 7, 5: 2, 6: 3, 7: 4}
    pattern = {"E": (0, 0, 1, 1, 0, -1, -1), "F": (0, 2, -1, 1, -2, 1, -1),
               "E'": (0, 1, 0, 1, -1, 0, -1), "F'": (0, -1, 2, 1, 1, -2, -1)}
    a, b = component_basis(1, (1, 2, 5), 3), component_basis(1, (1, 3, 6), 2)
    mats = {"E": a.E, "F": a.F, "E'": b.E, "F'": b.F}
    for name, row in pattern.items():
        for i in fano.INDICES:
            col = [mats[name][r][i] for r in range(DIM)]
            want = [Scalar(0)] * DIM
            want[sigma[i]] = Scalar(Fraction(row[i - 1], 2))
            assert col == want


def test_e_choice_relations():
    for i in fano.INDICES:
        for ln in (ln for ln in LINES if i in ln):
            for k in (t for t in fano.INDICES if t not in ln):
                base = component_basis(i, ln, k).E
                assert component_basis(i, ln, fano.star(i, k)).E == base
                for j in (t for t in ln if t != i):
                    assert component_basis(i, ln, fano.star(j, k)).E == mat_scale(-1, base)


def test_frame_rejects_bad_choice():
    with pytest.raises(ValueError):
        component_basis(1, (1, 2, 5), 2)
    with pytest.raises(ValueError):
        component_basis(3, (1, 2, 5), 3)


def test_default_frames():
    assert default_frame(1) == ((1, 2, 5), 3)
    for i in fano.INDICES:
        ln, k = default_frame(i)
        assert i in ln and k not in ln


def _frame_choice(data):
    i = data.draw(indices)
    ln = data.draw(st.sampled_from([ln for ln in LINES if i in ln]))
    k = data.draw(st.sampled_from([t for t in fano.INDICES if t not in ln]))
    j = data.draw(st.sampled_from([t for t in ln if t != i]))
    return i, j, ln, k


@settings(max_examples=50)
@given(nonzero_fractions | st.just(Fraction(0)), nonzero_fractions | st.just(Fraction(0)), st.data())
def test_spectral_law(a, b, data):
    i, j, ln, k = _frame_choice(data)
    want = tuple(sorted((Scalar(-a * a), Scalar(-b * b)), key=Scalar.sort_key))
    assert ad_square_spectrum(a, b, i, j, ln, k) == want


def test_spectral_examples():
    assert ad_square_spectrum(2, 3, 1, 2) == (Scalar(-9), Scalar(-4))
    assert ad_square_spectrum(1, 0, 1, 2) == (Scalar(-1), Scalar(0))
    with pytest.raises(ValueError):
        ad_square_spectrum(1, 1, 1, 3, (1, 2, 5), 3)


@settings(max_examples=25)
@given(nonzero_fractions, nonzero_fractions, alphas, st.data())
def test_spectral_law_after_normalization(a, b, alpha, data):
    # in L^eta the square of ad picks up eta_ij eta_{i, i*j}
    i, j, ln, k = _frame_choice(data)
    eta = act_normalization(AdmissibleMap([1] * 21), alpha)
    L = contraction_algebra(eta)
    f = eta(i, j) * eta(i, fano.star(i, j))
    want = tuple(sorted((f * Scalar(-a * a), f * Scalar(-b * b)), key=Scalar.sort_key))
    assert ad_square_spectrum(a, b, i, j, ln, k, algebra=L) == want


def test_g2_algebra_cached():
    assert g2_algebra() is build_g2().algebra
