import random

import pytest
from hypothesis import settings

from bisynset.graph import build_graph

from helpers import ADGHAL, FOREST, GHAB, GHABA, WOOD, WOODLAND, WOODS, pairs_of

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")


@pytest.fixture
def forest_pairs():
    return pairs_of(
        (GHABA, FOREST), (GHABA, WOODS), (GHABA, WOOD), (GHABA, WOODLAND),
        (GHAB, FOREST), (GHAB, WOODS), (GHAB, WOOD),
        (ADGHAL, FOREST), (ADGHAL, WOODS), (ADGHAL, WOOD),
    )  # fmt: skip


@pytest.fixture
def forest_graph(forest_pairs):
    return build_graph(forest_pairs)


@pytest.fixture
def rng():
    return random.Random(20240101)


# -- acceptance criteria summary ------------------------------------------------

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.skipped):
        return
    marker = getattr(report, "criterion", None)
    if marker:
        outcome = "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
        _criteria.append((marker, outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m:
        report.criterion = f"criterion {m.args[0]}: {m.args[1]}"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria:
        terminalreporter.write_line(f"[{outcome}] {name}")
