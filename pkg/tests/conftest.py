import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from suq2.algebra import AlgebraElement
from suq2.scalars import Scalar

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=4).filter(lambda x: x != 0)


@st.composite
def laurent_scalars(draw, max_terms=3, half_powers=False):
    """Laurent polynomials in q (or in q^(1/2) when ``half_powers``)."""
    exps = st.integers(-6, 6) if half_powers else st.integers(-3, 3).map(lambda e: 2 * e)
    terms = draw(st.lists(st.tuples(exps, small_fracs), min_size=1, max_size=max_terms))
    return Scalar.laurent(terms)


@st.composite
def scalars(draw):
    num = draw(laurent_scalars(half_powers=True))
    if draw(st.booleans()):
        den = draw(laurent_scalars(max_terms=2, half_powers=True))
        if den:
            return num / den
    return num


indices = st.tuples(st.integers(-3, 3), st.integers(0, 3), st.integers(0, 3))


@st.composite
def elements(draw, max_terms=3, coeffs=None):
    if coeffs is None:
        coeffs = laurent_scalars(max_terms=2)
    d = draw(st.dictionaries(indices, coeffs, min_size=1, max_size=max_terms))
    return AlgebraElement(d)


def rational_elements(max_terms=3):
    """Elements whose coefficients are q-free rationals."""
    return elements(max_terms=max_terms, coeffs=small_fracs.map(Scalar.from_rational))


HALF = Fraction(1, 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
