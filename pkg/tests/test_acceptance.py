"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` or ``python tests/test_acceptance.py``.
Timed criteria start from cold caches so the budget covers the real work.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from itertools import combinations

import pytest

from g2contractions import fano, g2, golden, nice, octonion
from g2contractions.contractions import (
    AdmissibleMap,
    NotAGradedContraction,
    act_collineation,
    act_normalization,
    build_theta,
    check_conditions_b,
    contraction_algebra,
    equivalence_label,
    eta_T,
    is_isomorphism,
    normal_form,
)
from g2contractions.fixtures import fixture_examples
from g2contractions.g2 import ad_square_spectrum, build_g2, derivation_span, homogeneous_span
from g2contractions.invariants import center, profile, span_closure, unit
from g2contractions.linalg import Scalar, flatten, kernel, mat_add, mat_scale
from g2contractions.linalg import commutator as mcomm
from g2contractions.octonion import DIM, E, LINES, Octonion, check_cyclic_identity, derivation_D, is_derivation

SEED = 20261014
REPS = nice.REPRESENTATIVES


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def _cold():
    g2.build_g2.cache_clear()
    g2.component_basis.cache_clear()
    octonion._basis_derivations.cache_clear()
    fano.all_collineations.cache_clear()
    nice.implications.cache_clear()
    nice._orbit_index.cache_clear()


def _rand_oct(rng):
    return Octonion([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(DIM)])


def _map_in_A(rng):
    cid = rng.choice(sorted(REPS))
    mask = REPS[cid]
    n = bin(mask).count("1")
    vals = [Fraction(rng.choice((-1, 1)) * rng.randint(1, 7), rng.randint(1, 3)) for _ in range(n)]
    if cid < 21:
        eta = AdmissibleMap.from_support(mask, vals)
    else:
        eta = act_normalization(eta_T(mask), _alpha(rng))
    return act_collineation(eta, rng.choice(fano.all_collineations()))


def _alpha(rng):
    return [Fraction(rng.choice((-1, 1)) * rng.randint(1, 5), rng.randint(1, 3)) for _ in range(7)]


# criteria ----------------------------------------------------------------------------


def criterion_1():
    _cold()
    rng = random.Random(SEED)
    with Timer() as t:
        dim = derivation_span().dim
        leib = all(is_derivation(derivation_D(E[a], E[b])) for a, b in combinations(range(DIM), 2))
        cyc = all(check_cyclic_identity(_rand_oct(rng), _rand_oct(rng), _rand_oct(rng)) for _ in range(100))
        x, y, z = derivation_D(E[1], E[2]), derivation_D(E[2], E[3]), derivation_D(E[1], E[5])
        d35, d26 = derivation_D(E[3], E[5]), derivation_D(E[2], E[6])
        jv1 = mcomm(y, mcomm(z, x)) == mat_add(mat_scale(-16, d35), mat_scale(-8, d26))
        jv2 = mcomm(x, mcomm(y, z)) == mat_add(mat_scale(-8, d35), mat_scale(12, d26))
    ok = dim == 14 and leib and cyc and jv1 and jv2 and t.seconds < 1
    return ok, f"dim={dim} leibniz={leib} cyclic(100)={cyc} jacobi_vectors={jv1 and jv2}", t.seconds, 1.0


def criterion_2():
    _cold()
    with Timer() as t:
        g = build_g2()
        L = g.algebra
        dims = tuple(homogeneous_span(i).dim for i in fano.INDICES)
        ident = span_closure([flatten(derivation_D(E[a], E[a])) for a in range(DIM)], DIM * DIM).dim
        abel = selfnorm = True
        for i in fano.INDICES:
            a, b = 2 * (i - 1), 2 * i - 1
            abel &= not L.bracket_basis(a, b)
            rows = [tuple(L.ad_basis(p)[r]) for p in (a, b) for r in range(14) if r not in (a, b)]
            selfnorm &= kernel(tuple(rows), 14) == g.component(i)
        prod = all(
            span_closure([L.bracket(u, v) for u in g.component(i).basis for v in g.component(j).basis], 14)
            == g.component(fano.star(i, j))
            for ln in LINES for i, j in combinations(ln, 2))
    ok = dims == (2,) * 7 and ident == 0 and abel and selfnorm and prod and t.seconds < 1
    return ok, f"dims={dims} identity={ident} abelian={abel} self_normalizing={selfnorm} products={prod}", \
        t.seconds, 1.0


def criterion_3():
    _cold()
    with Timer() as t:
        ncol = len(fano.all_collineations())
        ntrip = len(fano.generating_triplets())
        all_nice = nice.enumerate_all_nice()
        classes = nice.classify_orbits(all_nice)
        rows = nice.orbit_table(classes)
    table = tuple((tuple(r["classes"]), r["stabilizer_order"], r["orbit_size"]) for r in rows)
    total = sum(r["nice_sets"] for r in rows)
    sizes = sorted(c.orbit_size for c in classes)
    want_sizes = sorted([1] * 2 + [21] * 6 + [84] * 5 + [7] * 5 + [28] * 4 + [42] * 2)
    ok = (ncol == 168 and ntrip == 28 and len(all_nice) == 779 and len(classes) == 24
          and table == golden.ORBIT_TABLE and sizes == want_sizes and total == 779 and t.seconds < 60)
    return ok, f"|S*|={ncol} triplets={ntrip} nice={len(all_nice)} orbits={len(classes)} sum={total}", \
        t.seconds, 60.0


def criterion_4():
    rng = random.Random(SEED + 4)
    all_nice = nice.enumerate_all_nice()
    agree = centre_ok = 0
    in_a = 0
    with Timer() as t:
        for n in range(500):
            kind = n % 4
            mask = rng.randrange(1 << 21) if kind == 0 else rng.choice(all_nice)
            if kind == 3:
                eta = act_normalization(eta_T(mask), _alpha(rng))
            else:
                eta = AdmissibleMap.from_support(mask, [rng.choice([1, -1, 2, Fraction(1, 2), 3])
                                                        for _ in range(bin(mask).count("1"))])
            cond = check_conditions_b(eta)
            try:
                L = contraction_algebra(eta)
                built = True
            except NotAGradedContraction:
                built = False
            agree += cond == built
            if built:
                in_a += 1
                touched = {p for e in fano.mask_edges(eta.support) for p in e}
                free = [u for i in fano.INDICES if i not in touched for u in (2 * (i - 1), 2 * i - 1)]
                centre_ok += center(L) == span_closure([unit(14, u) for u in free], 14)
    ok = agree == 500 and centre_ok == in_a and 0 < in_a < 500
    return ok, f"agree={agree}/500 in_A={in_a} centre_formula={centre_ok}/{in_a}", t.seconds, None


def criterion_5():
    with Timer() as t:
        lam = normal_form(AdmissibleMap.from_support(REPS[14], [2, 3, 4, 5])).params["lambda"]

        def lab(cid, v):
            return equivalence_label(AdmissibleMap.from_support(REPS[cid], v))
        inv = all(lab(14, [1, 1, 1, x]) == lab(14, [1, 1, 1, 1 / x]) for x in (Fraction(2), Fraction(3, 5), Fraction(-7)))
        three = True
        for a, b in ((2, 3), (Fraction(1, 2), -1), (5, Fraction(2, 3))):
            base = lab(20, [1, a, b, 1, a, b])
            a, b = Fraction(a), Fraction(b)
            # the other two candidates (1/l, m/l) and (l/m, 1/m), on square roots
            for p, q in ((1 / a, b / a), (a / b, 1 / b)):
                three &= lab(20, [1, p, q, 1, p, q]) == base
        T, Tp = fano.edge_mask(golden.EXCEPTIONAL_PAIR["T"]), fano.edge_mask(golden.EXCEPTIONAL_PAIR["T_prime"])
        same = equivalence_label(eta_T(T)) == equivalence_label(eta_T(Tp))
        theta = is_isomorphism(build_theta(*golden.EXCEPTIONAL_PAIR["theta"]), contraction_algebra(eta_T(T)),
                               contraction_algebra(eta_T(Tp)))
    ok = lam == Scalar(Fraction(15, 8)) and inv and three and same and theta
    return ok, f"lambda={lam} inverse_merge={inv} three_set_merge={three} T8~T10={same} theta_iso={theta}", \
        t.seconds, None


D_PAIRS = {1: (14, 0), 2: (10, 2), 3: (8, 4), 4: (8, 4), 5: (6, 2), 6: (8, 6), 7: (2, 2), 8: (6, 6),
           9: (6, 6), 10: (6, 6), 11: (8, 6), 12: (6, 4), 13: (4, 8), 14: (4, 8), 15: (6, 6), 16: (6, 4),
           17: (2, 10), 18: (6, 6), 19: (6, 6), 20: (0, 12), 21: (2, 8), 22: (0, 12), 23: (0, 14), 24: (0, 14)}


def _matches(cid, p):
    f = golden.CLASS_FACTS[cid]
    nil = p.nilindex if p.nilindex is not None else golden.NOT
    solv = p.solvindex if p.solvindex is not None else golden.NOT
    return (p.d_pair == f.d_pair == D_PAIRS[cid] and nil == f.nilindex and solv == f.solvindex
            and (p.is_semisimple, p.is_reductive, p.is_simple) == (f.semisimple, f.reductive, f.simple))


def criterion_6():
    samples = [(cid, eta_T(m)) for cid, m in REPS.items()]
    for lam in (2, Fraction(1, 2), -1):
        samples.append((14, AdmissibleMap.from_support(REPS[14], [1, 1, 1, lam])))
        samples.append((17, AdmissibleMap.from_support(REPS[17], [1, lam, 1, 1, lam])))
    for lam, mu in ((2, 3), (Fraction(1, 2), -1), (-1, 2)):
        samples.append((20, AdmissibleMap.from_support(REPS[20], [1, lam, mu, 1, lam, mu])))
    with Timer() as t:
        bad = [cid for cid, eta in samples if not _matches(cid, profile(contraction_algebra(eta)))]
    ok = not bad and t.seconds < 10
    return ok, f"profiles={len(samples)} mismatches={bad}", t.seconds, 10.0


def criterion_7():
    with Timer() as t:
        fx = fixture_examples()
        bad = [f"{f.name}: {k}" for f in fx for k, (want, got) in f.facts.items() if want != got]
    ok = len(fx) == 3 and not bad
    return ok, f"fixtures={len(fx)} facts={sum(len(f.facts) for f in fx)} failing={bad}", t.seconds, None


def criterion_8():
    rng = random.Random(SEED + 8)
    with Timer() as t:
        spec = 0
        for _ in range(50):
            a, b = Fraction(rng.randint(-6, 6), rng.randint(1, 3)), Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            i = rng.choice(fano.INDICES)
            ln = rng.choice([ln for ln in LINES if i in ln])
            k = rng.choice([p for p in fano.INDICES if p not in ln])
            j = rng.choice([p for p in ln if p != i])
            want = tuple(sorted((Scalar(-a * a), Scalar(-b * b)), key=Scalar.sort_key))
            spec += ad_square_spectrum(a, b, i, j, ln, k) == want
        inv = 0
        for _ in range(100):
            eta = _map_in_A(rng)
            base = profile(contraction_algebra(eta))
            moved = act_normalization(act_collineation(eta, rng.choice(fano.all_collineations())), _alpha(rng))
            inv += profile(contraction_algebra(moved)) == base
    ok = spec == 50 and inv == 100
    return ok, f"spectral={spec}/50 profile_invariance={inv}/100", t.seconds, None


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def _line(n, ok, detail, seconds, budget):
    limit = f" (budget {budget:g}s)" if budget else ""
    return f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}  [{seconds:.2f}s{limit}]"


@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, capsys):
    ok, detail, seconds, budget = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail, seconds, budget))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for n, fn in enumerate(CRITERIA, 1):
        res = fn()
        results.append(res[0])
        print(_line(n, *res))
    sys.exit(0 if all(results) else 1)
