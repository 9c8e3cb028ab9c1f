"""Hypothesis strategies shared by the test modules."""
from fractions import Fraction

from hypothesis import strategies as st

from galjacobi.cyclo import Cyclotomic

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def cyclotomics(draw, max_order=60, max_terms=5):
    n = draw(st.integers(1, max_order))
    terms = draw(st.dictionaries(st.integers(0, n - 1), small_fractions, max_size=max_terms))
    return Cyclotomic.from_exponents(n, terms)


@st.composite
def cyclotomic_pairs(draw, max_order=60):
    """Two elements of one cyclotomic field Q(zeta_n)."""
    n = draw(st.integers(1, max_order))
    a = draw(st.dictionaries(st.integers(0, n - 1), small_fractions, max_size=5))
    b = draw(st.dictionaries(st.integers(0, n - 1), small_fractions, max_size=5))
    return n, Cyclotomic.from_exponents(n, a), Cyclotomic.from_exponents(n, b)
