import pytest

from courantkit.suites import SUITES, SuiteConfig, run_suite, tally, with_count
from courantkit.report import Report

SMALL = SuiteConfig(seed=3, count=12, max_degree=3)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_small_suites_pass(name):
    rep = run_suite(name, SMALL)
    assert rep.checks and rep.ok, rep.machine()


def test_suites_are_seeded():
    a = run_suite("semibracket", SMALL).machine()
    b = run_suite("semibracket", SMALL).machine()
    assert a == b


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nonsense")


def test_tally_reports_the_first_failure():
    reps = []
    for i in range(3):
        r = Report()
        r.record("c", "anchor", i != 1, f"bad {i}")
        reps.append(r)
    out = tally("t", reps)
    (c,) = out.checks
    assert not c.passed and c.residual == "sample 1: bad 1" and c.anchor == "anchor [2/3]"


def test_with_count():
    assert with_count(SMALL, 5).count == 5 and with_count(SMALL, 5).seed == 3
