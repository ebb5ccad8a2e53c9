from fractions import Fraction as Q
from functools import lru_cache

import pytest

from fareysub import Fraction


@lru_cache(maxsize=None)
def brute_farey(m):
    """F_m via stdlib rationals and set dedup; independent of the package's enumeration."""
    return tuple(sorted({Q(h, k) for k in range(1, m + 1) for h in range(k + 1)}))


@lru_cache(maxsize=None)
def brute_fbm(m):
    return tuple(q for q in brute_farey(2 * m) if q.denominator - m <= q.numerator <= m)


def to_q(f):
    return Q(f.h, f.k)


def from_q(q):
    return Fraction(q.numerator, q.denominator)


def parse_seq(text):
    return [Fraction.parse(tok) for tok in text.split(" < ")]


F5_DISPLAY = "0/1 < 1/5 < 1/4 < 1/3 < 2/5 < 1/2 < 3/5 < 2/3 < 3/4 < 4/5 < 1/1"
FB10_DISPLAY = (
    "0/1 < 1/6 < 1/5 < 1/4 < 2/7 < 1/3 < 3/8 < 2/5 < 3/7 < 4/9 < 1/2 < 5/9 < 4/7 "
    "< 3/5 < 5/8 < 2/3 < 5/7 < 3/4 < 4/5 < 5/6 < 1/1"
)


@pytest.fixture
def f5():
    return parse_seq(F5_DISPLAY)


@pytest.fixture
def fb10():
    return parse_seq(FB10_DISPLAY)


# ---------------------------------------------------------------- acceptance summary

_acceptance = {}


def pytest_runtest_logreport(report):
    marker = report.keywords.get("acceptance")
    if marker is None or report.nodeid not in _ACCEPTANCE_IDS:
        return
    number, title = _ACCEPTANCE_IDS[report.nodeid]
    if report.when == "call" or report.outcome != "passed":
        previous = _acceptance.get(number)
        if previous is None or previous[1] == "passed":
            _acceptance[number] = (title, report.outcome, report.duration)


_ACCEPTANCE_IDS = {}


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            _ACCEPTANCE_IDS[item.nodeid] = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, outcome, duration = _acceptance[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {title} ({duration:.1f} s)")
