import pytest
from hypothesis import given

from partconn.errors import GraphError
from partconn.generators import complete, complete_bipartite, cycle, doubled, path
from partconn.graph import (
    MultiGraph,
    check_partition,
    connected_components,
    crossing_edge_count,
    cut_degree,
    edges_inside,
    format_edge_list,
    induced_cpartite_factor,
    is_bipartite,
    is_complete,
    is_connected,
    load_graph,
    parse_edge_list,
    save_graph,
)

from conftest import multigraphs


def test_rejects_loops_and_duplicate_ids():
    with pytest.raises(GraphError):
        MultiGraph(3, [(0, 1, 1)])
    with pytest.raises(GraphError):
        MultiGraph(3, [(0, 0, 1), (0, 1, 2)])
    with pytest.raises(GraphError):
        MultiGraph(2, [(0, 0, 5)])


def test_parallel_edges_keep_ids():
    g = MultiGraph(2, [(7, 0, 1), (3, 0, 1)])
    assert g.degree(0) == 2
    assert set(g.edge_ids) == {3, 7}
    assert g.multiplicity()[(0, 1)] == 2
    h = g.spanning_subgraph([7])
    assert h.edge_ids == (7,) and h.endpoints(7) == (0, 1)


def test_spanning_subgraph_rejects_foreign_ids():
    with pytest.raises(GraphError):
        cycle(4).spanning_subgraph([99])


def test_cut_and_inside_counts():
    g = doubled(cycle(4))
    assert cut_degree(g, {0}) == 4
    assert cut_degree(g, {0, 1}) == 4
    assert edges_inside(g, {0, 1}) == 2
    assert crossing_edge_count(g, [[0], [1], [2], [3]]) == 8


def test_check_partition_drops_empty_parts():
    assert check_partition([[0, 1], [], [2]], range(3)) == (frozenset({0, 1}), frozenset({2}))
    with pytest.raises(GraphError):
        check_partition([[0], [0, 1]], range(2))
    with pytest.raises(GraphError):
        check_partition([[0]], range(2))


def test_bipartite_and_complete():
    assert is_bipartite(cycle(5)) is None
    sides = is_bipartite(complete_bipartite(2, 3))
    assert set(sides[0]) == {0, 1}
    assert is_complete(doubled(complete(4)))
    assert not is_complete(path(3))


def test_induced_cpartite_factor_keeps_crossing_edges():
    g = complete(4)
    h = induced_cpartite_factor(g, [[0, 1], [2, 3]])
    assert h.num_edges == 4
    assert is_bipartite(h) is not None


def test_induced_relabels():
    g = cycle(5)
    h, labels = g.induced([1, 2, 4])
    assert labels == (1, 2, 4)
    assert h.n == 3 and h.num_edges == 1


def test_edge_list_format_with_comments():
    text = "# a comment\np 3 2\ne 0 1\ne 1 2  # trailing\n"
    g = parse_edge_list(text)
    assert g.n == 3 and g.num_edges == 2
    with pytest.raises(GraphError):
        parse_edge_list("p 3 2\ne 0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("e 0 1\n")


@given(multigraphs(max_n=7))
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_save_and_load(tmp_path):
    g = doubled(path(4), 3)
    save_graph(g, tmp_path / "g.txt")
    assert load_graph(tmp_path / "g.txt") == g


@given(multigraphs(max_n=7))
def test_handshake_and_components(g):
    assert sum(g.degrees()) == 2 * g.num_edges
    comps = connected_components(g)
    assert sorted(v for c in comps for v in c) == list(g.vertices)
    assert is_connected(g) == (len(comps) == 1)
    assert crossing_edge_count(g, comps) == 0


@given(multigraphs(max_n=7))
def test_cut_degree_is_symmetric(g):
    x = {v for v in g.vertices if v % 2}
    assert cut_degree(g, x) == cut_degree(g, set(g.vertices) - x)


def _nx(g):
    import networkx as nx

    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from((u, v) for _, u, v in g.edges)
    return h


@given(multigraphs(max_n=7))
def test_structure_matches_networkx(g):
    import networkx as nx

    h = _nx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert (is_bipartite(g) is not None) == nx.is_bipartite(h)
    assert sorted(map(sorted, connected_components(g))) == sorted(map(sorted, nx.connected_components(h)))
