from pathlib import Path

import pytest

from idcodes import Code, Radices, closure, parse_code_file

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

# test_acceptance appends (label, passed) here; printed at the end of the run
ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


def load_fixture(name: str) -> Code:
    return parse_code_file((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture
def fig1a() -> Code:
    return load_fixture("fig1a.code")


@pytest.fixture
def fig1b() -> Code:
    return load_fixture("fig1b.code")


@pytest.fixture
def fig2() -> Code:
    return load_fixture("fig2.code")


@pytest.fixture
def even_sum() -> Code:
    return closure(Radices((4, 4)), [(1, 1), (0, 2)]).code


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {label}")

