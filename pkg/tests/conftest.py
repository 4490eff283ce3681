import random
from pathlib import Path

import pytest

from revmealy.automaton import MealyAutomaton, parse_automaton

FIXTURES = Path(__file__).parent / "fixtures"


def load(name: str) -> MealyAutomaton:
    return parse_automaton((FIXTURES / name).read_text())


@pytest.fixture
def table1():
    return load("table1.aut")


@pytest.fixture
def table2():
    return load("table2.aut")


@pytest.fixture
def ident3():
    return load("identity.aut")


def random_reversible(rng: random.Random, k: int, m: int) -> MealyAutomaton:
    """Reversible automaton from a shuffled list of configurations."""
    states = [f"s{j + 1}" for j in range(k)]
    symbols = [str(j + 1) for j in range(m)]
    cells = [(s, i) for s in states for i in symbols]
    images = cells[:]
    rng.shuffle(images)
    delta = {c: img[0] for c, img in zip(cells, images)}
    output = {c: img[1] for c, img in zip(cells, images)}
    return MealyAutomaton(states, symbols, delta, output)


def random_mealy(rng: random.Random, k: int, m: int) -> MealyAutomaton:
    states = [f"s{j + 1}" for j in range(k)]
    symbols = [str(j + 1) for j in range(m)]
    delta = {(s, i): rng.choice(states) for s in states for i in symbols}
    output = {(s, i): rng.choice(symbols) for s in states for i in symbols}
    return MealyAutomaton(states, symbols, delta, output)


# -- one pass/fail line per acceptance criterion ------------------------------

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _acceptance[report.nodeid.split("::")[-1]] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
