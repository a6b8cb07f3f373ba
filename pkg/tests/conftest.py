import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ctxlogic.prob_core import Proposition


def normalize(weights):
    total = sum(weights)
    return Proposition(tuple(Fraction(w, total) for w in weights))


def random_proposition(rng: random.Random, n: int, max_weight: int = 30) -> Proposition:
    while True:
        weights = [rng.randint(0, max_weight) for _ in range(n)]
        # sprinkle exact zeros so boundary faces of the simplex get hit
        if rng.random() < 0.2:
            weights[rng.randrange(n)] = 0
        if sum(weights):
            return normalize(weights)


def propositions(n: int, max_weight: int = 50):
    return (
        st.lists(st.integers(0, max_weight), min_size=n, max_size=n)
        .filter(lambda ws: sum(ws) > 0)
        .map(normalize)
    )


@pytest.fixture
def rng():
    return random.Random(20261016)


# --- acceptance criterion reporting --------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    n, text = marker.args
    status = "PASS" if report.passed else "FAIL"
    prev = _CRITERIA.get(n)
    if prev is None or prev[1] == "PASS":
        _CRITERIA[n] = (text, status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        text, status = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d} [{status}] {text}")
