import pytest

from g2contractions.algebra import GradedLieAlgebra, from_table, is_graded_map, is_homomorphism
from g2contractions.linalg import ONE, ZERO, Scalar, identity


def _heisenberg():
    return GradedLieAlgebra(["p", "q", "c"], [1, 2, 3], {(0, 1): {2: 1}})


def test_antisymmetry_filled_in():
    H = _heisenberg()
    assert H.structure_constant(0, 1, 2) == ONE
    assert H.structure_constant(1, 0, 2) == -ONE
    assert H.bracket_basis(0, 2) == ()
    assert H.satisfies_jacobi()


def test_grading_enforced():
    with pytest.raises(ValueError):
        GradedLieAlgebra(["p", "q", "c"], [1, 2, 1], {(0, 1): {2: 1}})
    with pytest.raises(ValueError):
        GradedLieAlgebra(["p"], [0, 1], {})
    with pytest.raises(ValueError):
        GradedLieAlgebra(["p", "q"], [0, 0], {(0, 0): {1: 1}})


def test_jacobi_witness_found():
    # [a,b] = b, [a,c] = c, [b,c] = a: the Jacobi sum on (a, b, c) is -2a
    bad = GradedLieAlgebra(["a", "b", "c"], [0, 0, 0], {(0, 1): {1: 1}, (0, 2): {2: 1}, (1, 2): {0: 1}})
    assert bad.jacobi_witness() == (0, 1, 2)


def test_scaled_and_components():
    H = _heisenberg()
    Z = H.scaled(lambda g, h: 0)
    assert Z.is_abelian() and not H.is_abelian()
    assert H.component(2) == [1]
    assert H.grading_support() == [1, 2, 3]


def test_from_table_and_bracket():
    H = from_table(["p", "q", "c"], [1, 2, 3], [(0, 1, 2, "3/2")])
    assert H.bracket((ONE, ZERO, ZERO), (ZERO, Scalar(2), ZERO)) == (ZERO, ZERO, Scalar(3))


def test_homomorphism_checks():
    H = _heisenberg()
    assert is_homomorphism(identity(3), H, H)
    swap = ((ZERO, ONE, ZERO), (ONE, ZERO, ZERO), (ZERO, ZERO, ONE))
    assert not is_homomorphism(swap, H, H)
    assert is_graded_map(identity(3), H, H)
    assert not is_graded_map(swap, H, H)


def test_immutable():
    with pytest.raises(AttributeError):
        _heisenberg().names = ()
