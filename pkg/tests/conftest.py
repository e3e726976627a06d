import pytest

_RESULTS: dict = {}


class AcceptanceLog:
    def record(self, number: int, title: str, ok: bool, detail: str = ""):
        _RESULTS[number] = (title, ok, detail)
        return ok


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceLog()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        title, ok, detail = _RESULTS[n]
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
