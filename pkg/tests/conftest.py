from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

PROPERTY_CASES = 100  # minimum randomized cases per property suite

small_ints = st.integers(min_value=-20, max_value=20)
fractions = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))


def series_strategy(min_trunc=1, max_trunc=10, elements=fractions):
    from cyops.seriesalg import QSeries

    return st.integers(min_trunc, max_trunc).flatmap(
        lambda m: st.lists(elements, min_size=m + 1, max_size=m + 1).map(lambda c: QSeries(c, m)))


# acceptance criteria report one line each in the terminal summary ----------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        ok = report.outcome == "passed" and _CRITERIA.get(number, ("", "PASS"))[1] == "PASS"
        _CRITERIA[number] = (title, "PASS" if ok else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d} {verdict}: {title}")
