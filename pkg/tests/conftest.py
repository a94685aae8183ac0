import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# lines collected by tests/test_acceptance.py, printed once at the end of the session
CRITERIA_LINES: list[str] = []


def elements_of(g):
    return frozenset(p.images for p in g.elements())


def oracle_elements(g):
    import oracles

    return oracles.closure([p.images for p in g.gens], g.degree)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_LINES:
            terminalreporter.write_line(line)
