import pytest

_RESULTS = pytest.StashKey[dict]()
_DETAILS = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")
    config.stash[_RESULTS] = {}
    config.stash[_DETAILS] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        num, title = mark.args
        res = item.config.stash[_RESULTS]
        prev = res.get(num, (title, True))
        res[num] = (title, prev[1] and rep.passed)


@pytest.fixture
def report(request):
    """Attach a one-line detail to the criterion of the running test."""
    mark = request.node.get_closest_marker("criterion")

    def add(text):
        if mark is not None:
            request.config.stash[_DETAILS].setdefault(mark.args[0], []).append(text)

    return add


def pytest_terminal_summary(terminalreporter, config):
    res = config.stash.get(_RESULTS, {})
    if not res:
        return
    details = config.stash[_DETAILS]
    terminalreporter.section("acceptance criteria")
    for num in sorted(res):
        title, ok = res[num]
        extra = "; ".join(details.get(num, []))
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{extra}]" if extra else ""))
