import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from courantkit.algebra import Q
from courantkit.exterior import Chart, DifferentialForm, VectorField
from courantkit.plectic import PlecticStructure

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

R3 = Chart.of("x", "y", "z")
R2 = Chart.of("q", "p")
VOL = R3.basis("x", "y", "z")


@pytest.fixture
def r3():
    return R3


@pytest.fixture
def P3():
    return PlecticStructure(R3, VOL)


@pytest.fixture
def P2():
    return PlecticStructure(R2, R2.basis("q", "p"))


rationals = st.builds(lambda n, m: Q(n) / m, st.integers(-6, 6), st.integers(1, 4))


def polynomials(chart=R3, max_degree=3, max_terms=4):
    exps = st.tuples(*[st.integers(0, max_degree)] * chart.dimension).filter(lambda e: sum(e) <= max_degree)
    return st.dictionaries(exps, rationals, max_size=max_terms).map(chart.poly)


def functions(chart=R3, max_degree=3):
    return polynomials(chart, max_degree).map(lambda p: DifferentialForm.function(chart, p))


def forms(degree, chart=R3, max_degree=3):
    from itertools import combinations
    idx = list(combinations(range(chart.dimension), degree))
    return st.lists(polynomials(chart, max_degree, 3), min_size=len(idx), max_size=len(idx)).map(
        lambda ps: DifferentialForm(chart, degree, dict(zip(idx, ps))))


def fields(chart=R3, max_degree=2):
    return st.lists(polynomials(chart, max_degree, 3), min_size=chart.dimension,
                    max_size=chart.dimension).map(lambda ps: VectorField(chart, ps))


def any_form(chart=R3, max_degree=3):
    return st.integers(0, chart.dimension).flatmap(lambda k: forms(k, chart, max_degree))


# one verdict line per acceptance criterion, collected by test_acceptance
CRITERIA: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA, key=lambda k: (int(k.split()[0].rstrip("abc")), k)):
        terminalreporter.write_line(CRITERIA[key])
