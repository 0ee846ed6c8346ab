from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from milnor_hodge.kernel import LaurentPolyY

settings.register_profile("repo", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("repo")

DATA = Path(__file__).parent / "data"

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda q: q != 0)
laurents = st.dictionaries(st.integers(-3, 4), rationals, max_size=5).map(LaurentPolyY)
exponent_lists = st.lists(st.integers(2, 7), min_size=1, max_size=4)


@pytest.fixture
def data_dir():
    return DATA


def y():
    return LaurentPolyY.y()


HALF = Fraction(1, 2)
