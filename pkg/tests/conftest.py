import pytest

_RESULTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def record(request):
    """Append one acceptance line: record(number, ok, detail)."""
    results = request.config.stash[_RESULTS]

    def _record(number, ok, detail):
        status = "PASS" if ok is True else ("FAIL" if ok is False else ok)
        line = f"{status} criterion {number:>2}: {detail}"
        results.append((number, line))
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(results):
        terminalreporter.write_line(line)
