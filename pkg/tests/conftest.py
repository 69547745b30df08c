from __future__ import annotations

from pathlib import Path

import pytest

from monosing import parse_spec, validate
from monosing.corpus import generate

GOLDEN = Path(__file__).parent / "golden"
CORPUS_SEED = 20261015
CORPUS_SIZE = 200

_acceptance_lines: list[tuple[int, str, str]] = []


def load(name: str):
    return validate(parse_spec((GOLDEN / name).read_text(encoding="utf-8")))


@pytest.fixture(scope="session")
def loops():
    return load("two_loops.alg")


@pytest.fixture(scope="session")
def glued():
    return load("glued_cycles.alg")


@pytest.fixture(scope="session")
def kx2():
    return load("kx2.alg")


@pytest.fixture(scope="session")
def corpus():
    return generate(CORPUS_SEED, CORPUS_SIZE, max_vertices=4, max_arrows=6)


@pytest.fixture(scope="session")
def small_corpus():
    return generate(7, 40, max_vertices=3, max_arrows=5)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, text = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _acceptance_lines.append((number, "PASS" if report.passed else "FAIL", text))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, text in sorted(_acceptance_lines, key=lambda t: (t[0], t[2])):
        terminalreporter.write_line(f"{status} criterion {number}: {text}")
