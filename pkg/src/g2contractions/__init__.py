"""Exact computations for graded contractions of g2 with its Z2^3-grading."""

from .algebra import GradedLieAlgebra
from .contractions import (
    AdmissibleMap,
    ContractionMap,
    EquivClassLabel,
    NotAGradedContraction,
    act_collineation,
    act_normalization,
    build_theta,
    check_conditions_b,
    contract,
    contraction_algebra,
    equivalence_label,
    eta_T,
    fixture_examples,
    normal_form,
    phi,
    phi_inv,
)
from .g2 import build_g2, g2_algebra
from .invariants import InvariantProfile, profile
from .linalg import Scalar, Subspace
from .nice import REPRESENTATIVES, canonical_rep, classify_orbits, enumerate_all_nice, is_nice
from .octonion import Octonion

__version__ = "0.1.0"

__all__ = [
    "AdmissibleMap", "ContractionMap", "EquivClassLabel", "GradedLieAlgebra", "InvariantProfile",
    "NotAGradedContraction", "Octonion", "REPRESENTATIVES", "Scalar", "Subspace", "act_collineation",
    "act_normalization", "build_g2", "build_theta", "canonical_rep", "check_conditions_b", "classify_orbits",
    "contract", "contraction_algebra", "enumerate_all_nice", "equivalence_label", "eta_T", "fixture_examples",
    "g2_algebra", "is_nice", "normal_form", "phi", "phi_inv", "profile",
]
