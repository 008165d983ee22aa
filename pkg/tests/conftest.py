import os
import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from g2contractions import fano
from g2contractions.linalg import Scalar

settings.register_profile(
    "default", deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("long", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=6)
nonzero_fractions = small_fractions.filter(bool)
scalars = st.builds(Scalar, small_fractions, small_fractions)
nonzero_scalars = scalars.filter(bool)
indices = st.sampled_from(fano.INDICES)
collineations = st.sampled_from(fano.all_collineations())
alphas = st.lists(nonzero_fractions, min_size=7, max_size=7)


@pytest.fixture
def rng():
    return random.Random(1234)


def random_fraction(rng, lo=-5, hi=5, den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))
