from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

_criteria: dict[str, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    num, title = marker.args
    entry = _criteria.setdefault(num, [title, True])
    if report.failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, ok = _criteria[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def a001498_rows():
    """Rows 0..12 of A001498 read from the vendored b-file."""
    values = []
    for line in (FIXTURES / "b001498.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        index, value = line.split()
        assert int(index) == len(values)
        values.append(int(value))
    rows, start, n = [], 0, 0
    while start < len(values):
        rows.append(values[start:start + n + 1])
        start += n + 1
        n += 1
    return rows
