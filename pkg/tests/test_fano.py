from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given

from conftest import collineations
from g2contractions import fano
from g2contractions.fano import (
    IDENTITY,
    Collineation,
    all_collineations,
    collineation_from_triplets,
    edge_mask,
    find_generating_pair,
    generate_group,
    generating_triplets,
    is_generating,
    lines,
    lines_through,
    mask_edges,
    parse_edge,
    star,
)


def _gl32_permutations():
    # independent oracle: invertible 3x3 matrices over F2 acting on the coordinates of g_1..g_7
    coords = {i: np.array(c) for i, c in fano.COORDS.items()}
    back = {tuple(c): i for i, c in fano.COORDS.items()}
    out = set()
    for bits in product((0, 1), repeat=9):
        m = np.array(bits).reshape(3, 3)
        if round(np.linalg.det(m)) % 2 == 0:
            continue
        out.add(tuple(back[tuple((m @ coords[i]) % 2)] for i in fano.INDICES))
    return out


def test_star_examples():
    assert star(1, 2) == 5
    assert star(1, 3) == 6
    assert star(2, 3) == 7
    assert star(1, 4) == 7
    with pytest.raises(ValueError):
        star(3, 3)
    with pytest.raises(ValueError):
        star(0, 1)


def test_star_is_group_law():
    for i, j in combinations(fano.INDICES, 2):
        assert star(i, j) == star(j, i)
        assert star(i, star(i, j)) == j


def test_lines():
    ls = lines()
    assert len(ls) == 7
    assert (1, 2, 5) in ls
    for i in fano.INDICES:
        assert len(lines_through(i)) == 3
    for i, j in combinations(fano.INDICES, 2):
        assert sum(1 for ln in ls if i in ln and j in ln) == 1


def test_generating_triplets():
    assert len(generating_triplets()) == 28
    assert is_generating(1, 2, 3)
    assert not is_generating(1, 2, 5)
    with pytest.raises(ValueError):
        is_generating(1, 1, 2)


def test_collineations_match_gl32():
    assert len(all_collineations()) == 168
    assert {tuple(s) for s in all_collineations()} == _gl32_permutations()


def test_transposition_example():
    # swapping 1 and 2 forces swapping 6 and 7
    s = collineation_from_triplets((1, 2, 3), (2, 1, 3))
    assert tuple(s) == (2, 1, 3, 4, 5, 7, 6)
    with pytest.raises(ValueError):
        Collineation((2, 1, 3, 4, 5, 6, 7))
    with pytest.raises(ValueError):
        Collineation((1, 1, 3, 4, 5, 6, 7))


def test_collineation_from_triplets_is_unique():
    src = (1, 2, 3)
    images = {collineation_from_triplets(src, t) for t in
              (p for p in product(fano.INDICES, repeat=3) if len(set(p)) == 3 and is_generating(*p))}
    assert len(images) == 168
    with pytest.raises(ValueError):
        collineation_from_triplets((1, 2, 5), (1, 2, 3))


@given(collineations, collineations, collineations)
def test_group_axioms(a, b, c):
    assert a.compose(b).compose(c) == a.compose(b.compose(c))
    assert a.compose(a.inverse()) == IDENTITY
    assert a.compose(IDENTITY) == a
    assert a.compose(b) in set(all_collineations())


@given(collineations)
def test_preserves_lines(s):
    assert {tuple(sorted(map(s, ln))) for ln in lines()} == set(lines())


@given(collineations, collineations)
def test_edge_action_is_action(a, b):
    m = edge_mask([(1, 2), (3, 7), (4, 6)])
    assert a.apply_mask(b.apply_mask(m)) == a.compose(b).apply_mask(m)
    assert {frozenset((a(x), a(y))) for x, y in mask_edges(m)} == {frozenset(e) for e in mask_edges(a.apply_mask(m))}


def test_generating_pair():
    a, b = find_generating_pair()
    assert len(generate_group([a, b])) == 168


def test_parse_edge():
    assert parse_edge("1,2") == (1, 2)
    assert parse_edge("21") == (1, 2)
    for bad in ("11", "1,2,3", "18", "x"):
        with pytest.raises(ValueError):
            parse_edge(bad)


def test_mask_roundtrip():
    es = [(1, 2), (2, 6), (6, 7)]
    assert mask_edges(edge_mask(es)) == es
    assert fano.FULL_MASK == (1 << 21) - 1
