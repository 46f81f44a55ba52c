from itertools import product

import pytest


def naive_solutions(rhs):
    """All solutions by exhaustive product over every upper-triangle entry.

    Shares no code with the engines; only usable for tiny inputs.
    """
    k = len(rhs)
    cells = [(i, j) for i in range(k) for j in range(i, k)]
    bounds = [rhs[i] // 2 if i == j else min(rhs[i], rhs[j]) for i, j in cells]
    out = []
    for values in product(*(range(b + 1) for b in bounds)):
        sums = [0] * k
        for (i, j), v in zip(cells, values):
            sums[i] += v
            sums[j] += v
        if sums == list(rhs):
            out.append(values)
    return out


def naive_offdiagonal(budgets):
    k = len(budgets)
    cells = [(i, j) for i in range(k) for j in range(i + 1, k)]
    n = 0
    for values in product(*(range(min(budgets[i], budgets[j]) + 1) for i, j in cells)):
        sums = [0] * k
        for (i, j), v in zip(cells, values):
            sums[i] += v
            sums[j] += v
        n += sums == list(budgets)
    return n


@pytest.fixture
def naive():
    return naive_solutions


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and report.when == "call":
        _acceptance.append((marker.args[0], marker.kwargs.get("title", item.name), report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_acceptance):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title}")
