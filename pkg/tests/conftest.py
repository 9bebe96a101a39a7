import pytest

from steiner_sparse import kernels

DEFAULT_SEED = 20190705


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for the randomised equivalence tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    limit = mark.kwargs.get("limit")
    _criteria.append((number, item.name, title, report.outcome, report.duration, limit))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, title, outcome, duration, limit in sorted(_criteria):
        status = "PASS" if outcome == "passed" else "FAIL"
        budget = f", limit {limit} s" if limit else ""
        terminalreporter.write_line(f"criterion {number} [{status}] {title} ({duration:.2f} s{budget}) {name}")
