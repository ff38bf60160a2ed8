from fractions import Fraction

import pytest
from hypothesis import strategies as st

HALF = Fraction(1, 2)
TAUS = [Fraction(-1, 2), Fraction(1, 2), Fraction(0), Fraction(1), Fraction(7, 3)]

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
taus = st.fractions(min_value=Fraction(-11, 12), max_value=10, max_denominator=12).filter(lambda t: t > -1)


@pytest.fixture(params=TAUS, ids=lambda t: f"tau={t}")
def tau(request):
    return request.param
