"""Published values the verification suite compares against, kept in one place.

Each entry carries a short locator saying where the value is stated.
Component lists name the homogeneous components lambda_i (i in 1..7);
``None`` means the value is not stated and is not checked.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ClassFacts:
    center: tuple | None = None          # components spanning z(L)
    derived: tuple | None = None         # components spanning L'
    d_pair: tuple | None = None
    lcs_stable: tuple | None = None      # components of the terminal lower-central term
    derived_chain: tuple | None = None   # dims of the full derived series
    nilindex: int | None = None          # NOT (-1) means "not nilpotent"
    solvindex: int | None = None
    semisimple: bool = False
    reductive: bool = False
    simple: bool = False
    radical: tuple | None = None
    levi: tuple | None = None
    locator: str = ""


NOT = -1  # marks "not nilpotent" / "not solvable"

_ALL = (1, 2, 3, 4, 5, 6, 7)


def _z(*c):
    return tuple(c)


CLASS_FACTS: dict[int, ClassFacts] = {
    1: ClassFacts(center=_ALL, derived=(), d_pair=(14, 0), nilindex=1, solvindex=1, reductive=True,
                  locator="class invariants, empty support: abelian"),
    2: ClassFacts(center=_z(3, 4, 5, 6, 7), derived=_z(5), d_pair=(10, 2), nilindex=2, solvindex=2,
                  locator="class invariants, support {12}"),
    3: ClassFacts(center=_z(4, 5, 6, 7), derived=_z(5, 6), d_pair=(8, 4), nilindex=2, solvindex=2,
                  locator="class invariants, support {12,13}"),
    4: ClassFacts(center=_z(3, 4, 6, 7), derived=_z(2, 5), d_pair=(8, 4), lcs_stable=_z(2, 5), nilindex=NOT,
                  solvindex=2, locator="class invariants, support {12,15}"),
    5: ClassFacts(center=_z(3, 4, 5), derived=_z(5), d_pair=(6, 2), nilindex=2, solvindex=2,
                  locator="class invariants, support {12,67}"),
    6: ClassFacts(center=_z(3, 4, 6, 7), derived=_z(1, 2, 5), d_pair=(8, 6), lcs_stable=_z(1, 2, 5),
                  nilindex=NOT, solvindex=NOT, reductive=True, radical=_z(3, 4, 6, 7), levi=_z(1, 2, 5),
                  locator="class invariants, support X_L12: reductive, Levi sl2+sl2"),
    7: ClassFacts(center=_z(1), derived=_z(1), d_pair=(2, 2), nilindex=2, solvindex=2,
                  locator="class invariants, support X^(1)"),
    8: ClassFacts(center=_z(5, 6, 7), derived=_z(5, 6, 7), d_pair=(6, 6), nilindex=2, solvindex=2,
                  locator="class invariants, support {12,13,14}"),
    9: ClassFacts(center=_z(4, 6, 7), derived=_z(2, 5, 6), d_pair=(6, 6), lcs_stable=_z(2, 5), nilindex=NOT,
                  solvindex=2, locator="class invariants, support {12,13,15}"),
    10: ClassFacts(d_pair=(6, 6), nilindex=2, solvindex=2,
                   locator="class invariants: shares the properties of the {12,13,14} case"),
    11: ClassFacts(center=_z(3, 4, 5, 7), derived=_z(3, 4, 5), d_pair=(8, 6), nilindex=2, solvindex=2,
                   locator="class invariants, support {12,16,26}"),
    12: ClassFacts(center=_z(3, 4, 5), derived=_z(3, 5), d_pair=(6, 4), nilindex=2, solvindex=2,
                   locator="class invariants, support {12,16,67}"),
    13: ClassFacts(center=_z(6, 7), derived=_z(2, 5, 6, 7), d_pair=(4, 8), lcs_stable=_z(2, 5), nilindex=NOT,
                   solvindex=2, locator="class invariants, support {12,13,14,15}"),
    14: ClassFacts(center=_z(4, 7), derived=_z(2, 3, 5, 6), d_pair=(4, 8), lcs_stable=_z(2, 3, 5, 6),
                   nilindex=NOT, solvindex=2, locator="class invariants, support {12,13,15,16}"),
    15: ClassFacts(center=_z(3, 4, 5), derived=_z(3, 4, 5), d_pair=(6, 6), nilindex=2, solvindex=2,
                   locator="class invariants, support {12,16,17,26}"),
    16: ClassFacts(center=_z(3, 4, 5), derived=_z(3, 5), d_pair=(6, 4), nilindex=2, solvindex=2,
                   locator="class invariants, support {12,16,27,67}"),
    17: ClassFacts(center=_z(7), derived=_z(2, 3, 5, 6, 7), d_pair=(2, 10), lcs_stable=_z(2, 3, 5, 6),
                   nilindex=NOT, solvindex=2, locator="class invariants, support {12,13,14,15,16}"),
    18: ClassFacts(center=_z(3, 4, 5), derived=_z(3, 4, 5), d_pair=(6, 6), nilindex=2, solvindex=2,
                   locator="class invariants, support {12,16,17,26,27}"),
    19: ClassFacts(center=_z(1, 2, 5), derived=_z(1, 2, 5), d_pair=(6, 6), nilindex=2, solvindex=2,
                   locator="class invariants, support X_LC12"),
    20: ClassFacts(center=(), derived=_z(2, 3, 4, 5, 6, 7), d_pair=(0, 12), lcs_stable=_z(2, 3, 4, 5, 6, 7),
                   nilindex=NOT, solvindex=2, locator="class invariants, support X_(1)"),
    21: ClassFacts(center=_z(4), derived=_z(4, 5, 6, 7), d_pair=(2, 8), nilindex=3, solvindex=2,
                   locator="class invariants, support P_123: 3-step nilpotent"),
    22: ClassFacts(center=(), derived=_z(2, 3, 4, 5, 6, 7), d_pair=(0, 12), lcs_stable=_z(2, 3, 4, 5, 6, 7),
                   derived_chain=(14, 12, 4, 0), nilindex=NOT, solvindex=3,
                   locator="class invariants, support T_123: 3-step solvable"),
    23: ClassFacts(center=(), derived=_ALL, d_pair=(0, 14), lcs_stable=_ALL, nilindex=NOT, solvindex=NOT,
                   radical=_z(3, 4, 6, 7), levi=_z(1, 2, 5),
                   locator="class invariants, support X minus X_LC12: not reductive"),
    24: ClassFacts(center=(), derived=_ALL, d_pair=(0, 14), nilindex=NOT, solvindex=NOT, semisimple=True,
                   reductive=True, simple=True, locator="class invariants, full support: simple"),
}

# collineation classes: (class ids, stabilizer order, orbit size), orbit-count table
ORBIT_TABLE = (
    ((1, 24), 168, 1),
    ((2, 4, 5, 14, 16, 22), 8, 21),
    ((3, 9, 12, 13, 15), 2, 84),
    ((6, 7, 19, 20, 23), 24, 7),
    ((8, 10, 11, 21), 6, 28),
    ((17, 18), 4, 42),
)

COUNTS = {
    "collineations": (168, "Fano plane: 7*6*4 collineations"),
    "generating_triplets": (28, "triplets that are not lines"),
    "nice_total": (779, "orbit-count table: total number of nice sets"),
    "orbits": (24, "classification of nice sets up to collineation"),
    "nice_cardinalities": ((0, 1, 2, 3, 4, 5, 6, 10, 15, 21), "sizes of the 24 representatives"),
    "g2_dim": (14, "g2 has dimension 14"),
    "component_dim": (2, "each homogeneous component is a 2-dim Cartan subalgebra"),
}

# change-of-basis table for lambda_1: d(e_i) = alpha_{d,i} e_{sigma(i)}, sigma = (25)(36)(47)
BASIS_CHANGE_SIGMA = {1: 1, 2: 5, 3: 6, 4: 7, 5: 2, 6: 3, 7: 4}
BASIS_CHANGE_TABLE = {
    "E": (0, 0, 1, 1, 0, -1, -1),
    "F": (0, 2, -1, 1, -2, 1, -1),
    "E'": (0, 1, 0, 1, -1, 0, -1),
    "F'": (0, -1, 2, 1, 1, -2, -1),
}
# E(qe_k) = 1/2 (e_i q) e_k forces every entry of the tabulated pattern to be halved
BASIS_CHANGE_SCALE = "1/2"

CANONICAL_FORMS = {
    "T14_lambda": ((2, 3, 4, 5), "15/8", "canonical forms: lambda = eta13 eta16 / (eta12 eta15)"),
    "T20_squares": ((1, 4, 9, 1, 4, 9), ("16", "81"), "canonical forms: lambda^2 and mu^2 for X_(1)"),
}

JACOBI_VECTORS = {
    # x = D(e1,e2), y = D(e2,e3), z = D(e1,e5)
    "y_z_x": ({(3, 5): -16, (2, 6): -8}, "Jacobi witness: [y,[z,x]] = -16 D(e3,e5) - 8 D(e2,e6)"),
    "x_y_z": ({(3, 5): -8, (2, 6): 12}, "Jacobi witness: [x,[y,z]] = -8 D(e3,e5) + 12 D(e2,e6)"),
}

EXCEPTIONAL_PAIR = {
    "triplet": (1, 2, 3),
    "T": ((1, 2), (1, 3), (1, 7)),       # collinear to T10
    "T_prime": ((1, 2), (1, 3), (1, 4)),  # collinear to T8
    "classes": (10, 8),
    "theta": (7, 4),
    "locator": "exceptional equivalence of the T8 and T10 supports via theta_{j*k, i*j*k}",
}
