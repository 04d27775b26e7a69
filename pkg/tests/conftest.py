from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from partconn.generators import (
    complete,
    complete_bipartite,
    cycle,
    doubled,
    path,
    random_bipartite_tree_connected,
    random_multigraph,
    random_tree_connected,
)
from partconn.graph import MultiGraph

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@st.composite
def multigraphs(draw, min_n=1, max_n=6, max_edges=12):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return MultiGraph(n)
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
            max_size=max_edges,
        )
    )
    return MultiGraph.from_pairs(n, pairs)


def small_corpus(max_n: int = 8) -> list:
    """Named graphs used wherever a fixed corpus is enough."""
    out = []
    for n in range(2, max_n + 1):
        out.append((f"K{n}", complete(n)))
        out.append((f"P{n}", path(n)))
        if n >= 3:
            out.append((f"C{n}", cycle(n)))
            out.append((f"2C{n}", doubled(cycle(n))))
    for a in range(1, 5):
        for b in range(a, 5):
            if a + b <= max_n:
                out.append((f"K{a},{b}", complete_bipartite(a, b)))
    for seed in range(12):
        n = 3 + seed % (max_n - 2)
        out.append((f"rand{seed}", random_multigraph(n, 2 * n, seed)))
        out.append((f"tc{seed}", random_tree_connected(n, 1 + seed % 3, seed % 4, seed)))
    for seed in range(6):
        out.append((f"btc{seed}", random_bipartite_tree_connected(2 + seed % 2, 2 + seed % 3, 1 + seed % 2, 1, seed)))
    return [(name, g) for name, g in out if g.n <= max_n]


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is not None:
        ACCEPTANCE[crit[0]] = (crit[1], "PASS" if report.passed else "FAIL")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, status = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
