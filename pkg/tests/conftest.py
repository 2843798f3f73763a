"""Per-criterion reporting for the acceptance suite.

Tests tagged ``@pytest.mark.criterion(n)`` are grouped by ``n``; after the
run one PASS/FAIL line is printed per criterion (a criterion passes only if
every test tagged with it passes).
"""

from collections import OrderedDict

import pytest

_outcomes: "OrderedDict[int, list[tuple[str, str]]]" = OrderedDict()
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and short title")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            n = m.args[0]
            _outcomes.setdefault(n, [])
            if len(m.args) > 1:
                _titles[n] = m.args[1]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes[m.args[0]].append((item.name, "pass" if rep.passed else "fail"))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria (exact, tol=0)")
    for n in sorted(_outcomes):
        results = _outcomes[n]
        if not results:
            continue
        failed = [name for name, s in results if s != "pass"]
        status = "FAIL" if failed else "PASS"
        line = f"criterion {n:>2}: {status}  {_titles.get(n, '')}  ({len(results) - len(failed)}/{len(results)} cases)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        tr.write_line(line)
