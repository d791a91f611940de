import re
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def load_triples(name):
    text = (DATA / f"{name}.txt").read_text()
    return {tuple(map(int, t)) for t in re.findall(r"\((\d+),(\d+),(\d+)\)", text)}


@pytest.fixture(scope="session")
def appendix():
    return {p.stem: load_triples(p.stem) for p in DATA.glob("*.txt")}


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""
    name = request.node.name
    ACCEPTANCE[name] = "FAIL"
    yield
    rep = getattr(request.node, "rep_call", None)
    if rep is not None and rep.passed:
        ACCEPTANCE[name] = "PASS"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line(f"{status}  {name}")
