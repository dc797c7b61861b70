import pathlib

import pytest

from hypertoric import SymplecticRep, build_zonotope, enumerate_window
from hypertoric.corpus import fixed_corpus

ROOT = pathlib.Path(__file__).resolve().parent.parent

# acceptance tests append (label, "PASS"/"FAIL") here; the terminal hook
# prints one line per criterion after the run so verdicts survive capture
ACCEPTANCE_LINES: list[tuple[str, str]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for label, verdict in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{verdict}  {label}")


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def rep_a():
    return SymplecticRep(1, ((1,), (1,)))


@pytest.fixture(scope="session")
def rep_b():
    return SymplecticRep(2, ((1, 0), (0, 1), (1, 1)))


@pytest.fixture(scope="session")
def window_a(rep_a):
    return enumerate_window(build_zonotope(rep_a), (1,))


@pytest.fixture(scope="session")
def window_b(rep_b):
    return enumerate_window(build_zonotope(rep_b), (2, 1))


@pytest.fixture(scope="session")
def corpus():
    entries = fixed_corpus()
    assert len(entries) >= 20
    return entries


@pytest.fixture(scope="session")
def problems_dir():
    return ROOT / "problems"


@pytest.fixture(scope="session")
def golden_dir():
    return ROOT / "tests" / "golden"
