from __future__ import annotations

import pytest

CRITERIA: dict = {}


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, reports) -> bool:
        bad = [f"{rep.suite}: {r.name}" for rep in reports for r in rep.failures()]
        total = sum(len(rep.relations) for rep in reports)
        CRITERIA[number] = (title, not bad, total, bad)
        return not bad

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        title, ok, total, bad = CRITERIA[n]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d} {status}  {title} ({total - len(bad)}/{total} relations)")
        for line in bad:
            terminalreporter.write_line(f"      failing: {line}")
