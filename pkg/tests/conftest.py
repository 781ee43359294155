from __future__ import annotations

import pytest

from helpers import complete_bipartite, g_star_graph
from trapgi.graph import BipartiteGraph, bipartition

ACCEPTANCE_MODULE = "test_acceptance.py"
_acceptance_results: dict[str, str] = {}


@pytest.fixture
def g_star() -> BipartiteGraph:
    return bipartition(g_star_graph())


@pytest.fixture
def k33() -> BipartiteGraph:
    return bipartition(complete_bipartite(3, 3))


# -- acceptance reporting ----------------------------------------------------------------

def pytest_runtest_logreport(report):
    if ACCEPTANCE_MODULE not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance_results[report.nodeid.split("::")[-1]] = report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results.items():
        verdict = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
