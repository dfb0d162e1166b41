from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from superjack.coeffs import ThetaFunction
from superjack.mpoly import MPoly
from superjack.symfunc import POWERSUM, SymFunc

settings.register_profile("default", deadline=None, max_examples=50,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

T = sympy.Symbol("theta")


def to_sympy(c: ThetaFunction):
    num = sum(sympy.Rational(a.numerator, a.denominator) * T**k for k, a in enumerate(c.numerator))
    den = sum(sympy.Rational(a.numerator, a.denominator) * T**k for k, a in enumerate(c.denominator))
    return num / den


def sympy_equal(c: ThetaFunction, expr) -> bool:
    return sympy.simplify(to_sympy(c) - expr) == 0


def theta_of(expr) -> ThetaFunction:
    """ThetaFunction from a sympy rational expression in theta."""
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    ncoeffs = sympy.Poly(num, T).all_coeffs()[::-1]
    dcoeffs = sympy.Poly(den, T).all_coeffs()[::-1]
    return ThetaFunction.from_coeffs(_fractions(ncoeffs), _fractions(dcoeffs))


def _fractions(cs):
    return [Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) for c in cs]


small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def theta_functions(draw, nonzero=False):
    num = draw(st.lists(small_ints, min_size=1, max_size=4))
    den = draw(st.lists(small_ints, min_size=1, max_size=3).filter(any))
    c = ThetaFunction.from_coeffs(num, den)
    if nonzero and not c:
        c = ThetaFunction.from_coeffs([1, 1])
    return c


@st.composite
def partitions_of_size_at_most(draw, k):
    w = draw(st.integers(min_value=0, max_value=k))
    parts = []
    left, top = w, w
    while left:
        p = draw(st.integers(min_value=1, max_value=min(left, top)))
        parts.append(p)
        left -= p
        top = p
    return tuple(parts)


@st.composite
def powersum_elements(draw, max_degree=3, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(min_value=1, max_value=max_terms))):
        lam = draw(partitions_of_size_at_most(max_degree))
        terms[lam] = draw(st.integers(min_value=-3, max_value=3))
    return SymFunc(POWERSUM, terms)


@st.composite
def plain_polys(draw, N, max_degree=4, max_terms=4):
    items = {}
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        e = tuple(draw(st.lists(st.integers(min_value=0, max_value=max_degree), min_size=N, max_size=N)))
        if sum(e) > max_degree:
            continue
        items[e] = draw(st.integers(min_value=-3, max_value=3))
    return MPoly(N, 0, items)


# -- acceptance summary ----------------------------------------------------------------

_criteria: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, [title, True, False])
    if call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception):
        entry[1] = False
    if call.when == "call":
        entry[2] = True


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok, ran = _criteria[number]
        status = "PASS" if ok and ran else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number}: {title}")
