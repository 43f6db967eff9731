from fractions import Fraction

import pytest
from hypothesis import strategies as st

from monoivt import Matrix, Vector


def matrices(max_m=4, max_n=4, lo=-3, hi=3, min_m=1, min_n=1):
    """Small integer matrices, with low-rank products mixed in."""

    @st.composite
    def build(draw):
        m = draw(st.integers(min_m, max_m))
        n = draw(st.integers(min_n, max_n))
        entry = st.integers(lo, hi)
        if draw(st.booleans()):
            rows = draw(st.lists(st.lists(entry, min_size=n, max_size=n), min_size=m, max_size=m))
            return Matrix(rows)
        k = draw(st.integers(1, min(m, n)))
        left = draw(st.lists(st.lists(st.integers(-2, 2), min_size=k, max_size=k), min_size=m, max_size=m))
        right = draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=k, max_size=k))
        return Matrix(left) @ Matrix(right)

    return build()


def vectors(dim, lo=-4, hi=4):
    return st.lists(st.integers(lo, hi), min_size=dim, max_size=dim).map(Vector)


rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**40)


# -- acceptance summary ---------------------------------------------------

_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label, text = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria[label] = ("PASS" if rep.passed else "FAIL", text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.lstrip("AC"))):
        status, text = _criteria[label]
        terminalreporter.write_line(f"{label:>5} {status}  {text}")


@pytest.fixture
def frac():
    return Fraction
