import pytest

from qtreesearch.tree_model import load_tree

_criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, text = marker.args
    passed = call.excinfo is None
    _criteria[number] = (text, passed and _criteria.get(number, (text, True))[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, passed = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {text}")


@pytest.fixture(scope="session")
def fig1():
    return load_tree("fig1")


@pytest.fixture(scope="session")
def fig2():
    return load_tree("fig2")
