"""Shared fixtures and the acceptance-criteria summary hook."""

import pytest

from teich2.octagon import domain_grid

_CRITERIA: dict[int, tuple[str, bool, str]] = {}
_TOTAL = 12


def record(num: int, description: str, ok: bool, detail: str = "") -> None:
    """Register one acceptance-criterion outcome for the terminal summary."""
    _CRITERIA[num] = (description, ok, detail)


@pytest.fixture(scope="session")
def acceptance_grid():
    """20 x 20 in-domain parameter grid with margin 0.02."""
    return domain_grid(20, 20, margin=0.02)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in range(1, _TOTAL + 1):
        if num in _CRITERIA:
            description, ok, detail = _CRITERIA[num]
            status = "PASS" if ok else "FAIL"
            line = f"{status}  {num:2d}. {description}"
            if detail:
                line += f"  [{detail}]"
        else:
            line = f"----  {num:2d}. not run"
        terminalreporter.write_line(line)
