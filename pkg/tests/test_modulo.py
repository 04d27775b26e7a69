import pytest
from hypothesis import given, strategies as st

from partconn.errors import CapacityError, GraphError, PipelineStall
from partconn.generators import (
    complete,
    complete_bipartite,
    cycle,
    doubled,
    path,
    random_bipartite_tree_connected,
    random_tree_connected,
)
from partconn.graph import is_connected
from partconn.modulo import (
    akfactor_pipeline,
    bipartite_bounded_tree_connected,
    degree_factor_search,
    even_connected_factor,
    even_factor_pipeline,
    modulo_factor_search,
)
from partconn.oracles import all_factors

from conftest import multigraphs


def oracle_degree_factor(h, allowed):
    for eids in all_factors(h):
        sub = h.spanning_subgraph(eids)
        if is_connected(sub) and all(d in allowed[v] for v, d in enumerate(sub.degrees())):
            return True
    return False


@given(multigraphs(min_n=2, max_n=5, max_edges=9), st.data())
def test_degree_search_matches_enumeration(h, data):
    allowed = [set(data.draw(st.lists(st.integers(0, 4), max_size=3))) for _ in h.vertices]
    found = degree_factor_search(h, allowed)
    assert (found is not None) == oracle_degree_factor(h, allowed)
    if found is not None:
        sub = h.spanning_subgraph(found)
        assert is_connected(sub)
        assert all(d in allowed[v] for v, d in enumerate(sub.degrees()))


@pytest.mark.parametrize("h", [cycle(4), cycle(6)])
def test_even_cycles(h):
    assert modulo_factor_search(h, 1, 0).edge_ids == frozenset(h.edge_ids)
    # with k = 2 every vertex other than u is capped at degree 1
    assert modulo_factor_search(h, 2, 0) is None
    assert degree_factor_search(h, [[2]] * h.n) == frozenset(h.edge_ids)


def test_doubled_k33_mod2():
    h = doubled(complete_bipartite(3, 3))
    for u in (0, 4):
        cert = modulo_factor_search(h, 2, u)
        assert cert.problems(h) == []
        assert all(d in (2, 4) for v, d in enumerate(cert.degrees) if v != u)
        assert cert.degrees[u] in (2, 4, 6)


def test_modulo_input_checks():
    with pytest.raises(GraphError):
        modulo_factor_search(cycle(5), 1, 0)
    with pytest.raises(GraphError):
        modulo_factor_search(cycle(4), 0, 0)
    with pytest.raises(CapacityError):
        modulo_factor_search(doubled(complete_bipartite(3, 3), 3), 1, 0)


def test_even_connected_examples():
    assert even_connected_factor(cycle(4)).edge_ids == frozenset(range(4))
    cert = even_connected_factor(doubled(path(3)))
    assert cert.degrees == (2, 4, 2)
    assert even_connected_factor(path(3)) is None


@given(st.integers(1, 2), st.integers(0, 30))
def test_modulo_succeeds_on_bipartite_tree_connected(k, seed):
    a = 1 + seed % 3
    b = 2 + seed % 2
    h = random_bipartite_tree_connected(a, b, 2 * k - 1, seed % 3, seed)
    for u in h.vertices:
        cert = modulo_factor_search(h, k, u, max_edges=None)
        assert cert is not None
        assert cert.problems(h) == []
        assert all(d <= h.degree(v) - k + 1 for v, d in enumerate(cert.degrees) if v != u)


@pytest.mark.parametrize("g", [complete(8), complete(4)])
def test_bounded_bipartite_tree_connected(g):
    cert = bipartite_bounded_tree_connected(g, 1)
    assert cert.bipartite and cert.connected and cert.max_degree <= 4
    assert cert.problems(g) == []


def test_bounded_bipartite_reports_failed_hypothesis():
    with pytest.raises(PipelineStall) as info:
        bipartite_bounded_tree_connected(cycle(4), 1)
    assert info.value.hypothesis["hypothesis_ok"] is False
    cert = bipartite_bounded_tree_connected(doubled(cycle(4)), 1)
    assert cert.meta["hypothesis_ok"] is False and cert.max_degree <= 4


@pytest.mark.parametrize("n", [6, 7, 8])
def test_akfactor_complete(n):
    g = complete(n)
    cert = akfactor_pipeline(g, 1)
    assert cert.bipartite and cert.connected
    assert set(cert.degrees) <= {1, 2, 3, 4}
    assert cert.problems(g) == []


def test_akfactor_general_route_on_tree_connected_graph():
    g = random_tree_connected(6, 3, 2, seed=5)
    cert = akfactor_pipeline(g, 1)
    assert cert.meta["route"] == "general"
    assert cert.degrees[cert.meta["u"]] <= 4
    assert set(cert.degrees) <= {1, 2, 3, 4}


def test_akfactor_small_order_uses_direct_construction():
    cert = akfactor_pipeline(complete(6), 2)
    assert cert.meta["route"] == "direct"
    assert set(cert.degrees) <= {2, 4, 6, 8}
    with pytest.raises(GraphError):
        akfactor_pipeline(complete(5), 2)


def test_akfactor_cycle_stalls_without_packing():
    with pytest.raises(PipelineStall):
        akfactor_pipeline(cycle(6), 1)


@pytest.mark.parametrize("n", [6, 7, 8])
def test_even_factor_pipeline(n):
    g = complete(n)
    cert = even_factor_pipeline(g)
    assert cert.bipartite and cert.connected and set(cert.degrees) <= {2, 4, 6}
    assert cert.problems(g) == []
