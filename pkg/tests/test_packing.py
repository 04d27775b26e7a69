import pytest
from hypothesis import given

from partconn.certificates import spanning_tree_problems
from partconn.errors import GraphError, NotTreeConnected
from partconn.generators import complete, cycle, doubled, path, random_tree_connected
from partconn.graph import MultiGraph, crossing_edge_count
from partconn.oracles import nash_williams_number
from partconn.packing import (
    ForestPacking,
    extract_spanning_trees,
    is_tree_connected,
    minimally_tree_connected,
    tree_packing_number,
)

from conftest import multigraphs


@pytest.mark.parametrize(
    "g, expected",
    [(complete(4), 2), (complete(6), 3), (cycle(5), 1), (path(4), 1), (doubled(cycle(4)), 2), (MultiGraph(3, [(0, 0, 1)]), 0)],
)
def test_packing_number_frozen(g, expected):
    assert tree_packing_number(g) == expected
    assert nash_williams_number(g) == expected


def test_single_vertex_has_no_packing_number():
    with pytest.raises(GraphError):
        tree_packing_number(MultiGraph(1))
    assert is_tree_connected(MultiGraph(1), 5)


@given(multigraphs(min_n=2, max_n=6, max_edges=12))
def test_packing_matches_partition_bound(g):
    assert tree_packing_number(g) == nash_williams_number(g)


@given(multigraphs(min_n=2, max_n=6, max_edges=14))
def test_packing_yields_trees_or_certificate(g):
    m = tree_packing_number(g) + 1
    trees = extract_spanning_trees(g, m - 1) if m > 1 else []
    assert spanning_tree_problems(g, trees) == []
    with pytest.raises(NotTreeConnected) as info:
        extract_spanning_trees(g, m)
    exc = info.value
    assert exc.crossing == crossing_edge_count(g, exc.partition)
    assert exc.crossing < m * (len(exc.partition) - 1)


def test_k4_three_trees_certificate():
    with pytest.raises(NotTreeConnected) as info:
        extract_spanning_trees(complete(4), 3)
    assert info.value.crossing == 6
    assert len(info.value.partition) == 4


def test_forest_packing_keeps_forests_disjoint():
    g = random_tree_connected(6, 3, 4, seed=1)
    fp = ForestPacking(g, 3)
    assert fp.is_full
    forests = fp.forests()
    assert sum(len(f) for f in forests) == fp.size() == 15
    assert len(set().union(*forests)) == fp.size()
    assert len(fp.unassigned()) == g.num_edges - 15


@given(multigraphs(min_n=2, max_n=6, max_edges=14))
def test_minimal_tree_connected(g):
    m = tree_packing_number(g)
    if m == 0:
        return
    h = minimally_tree_connected(g, m)
    assert h.num_edges == m * (g.n - 1)
    assert set(h.edge_ids) <= set(g.edge_ids)
    assert is_tree_connected(h, m)
    assert min(h.degrees()) <= 2 * m


def test_minimal_examples():
    h = minimally_tree_connected(cycle(4), 1)
    assert h.num_edges == 3
    assert minimally_tree_connected(complete(4), 2).num_edges == 6
    h = minimally_tree_connected(doubled(cycle(4)), 2)
    assert h.num_edges == 6
    with pytest.raises(NotTreeConnected):
        minimally_tree_connected(cycle(4), 2)
