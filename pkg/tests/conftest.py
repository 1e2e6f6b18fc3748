import pytest

_RESULTS = pytest.StashKey[dict]()


def run_check(number, check):
    """Run a check returning (ok, detail); exceptions count as failures."""
    try:
        ok, detail = check()
    except Exception as exc:  # noqa: BLE001 - reported as a failing line
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return ok, f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.fixture
def acceptance(request):
    """Run one acceptance check, keep its PASS/FAIL line for the summary, assert it."""
    store = request.config.stash.setdefault(_RESULTS, {})

    def run(number, check):
        ok, line = run_check(number, check)
        store[number] = line
        print(line)
        assert ok, line

    return run


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, {})
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
