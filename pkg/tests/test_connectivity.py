from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from partconn.connectivity import is_partition_connected, partition_connected_components, theta
from partconn.generators import complete, cycle, doubled, path
from partconn.graph import MultiGraph
from partconn.oracles import brute_components, is_partition_connected_by_enumeration, theta_by_enumeration
from partconn.packing import is_tree_connected
from partconn.setfunc import SetFunction, is_intersecting_supermodular

from conftest import multigraphs


def test_frozen_values():
    assert theta(cycle(4), SetFunction.uniform(2)) == 4
    assert is_partition_connected(complete(4), SetFunction.uniform(2))
    assert not is_partition_connected(cycle(4), SetFunction.uniform(2))
    assert theta(complete(4), SetFunction.uniform(2)) == 2
    assert theta(path(5), SetFunction.uniform(1)) == 1


def test_theta_of_empty_remainder_is_zero():
    assert theta(cycle(3), SetFunction.uniform(1), [0, 1, 2]) == 0


def test_theta_counts_isolated_vertices():
    assert theta(MultiGraph(3), SetFunction.uniform(1)) == 3


def test_component_examples():
    two_triangles = MultiGraph.from_pairs(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert partition_connected_components(two_triangles, SetFunction.uniform(1)) == (
        frozenset({0, 1, 2}),
        frozenset({3, 4, 5}),
    )
    assert len(partition_connected_components(cycle(4), SetFunction.uniform(2))) == 4
    assert partition_connected_components(complete(4), SetFunction.uniform(2)) == (frozenset(range(4)),)


def test_theta_remove_uses_original_labels():
    l = SetFunction.table(3, {1: 5, 2: 0, 4: 0, 3: 5, 5: 5, 6: 0, 7: 5})
    # removing 0 leaves vertices 1, 2 whose l values are 0
    assert theta(path(3), l, [0]) == 0
    assert theta_by_enumeration(path(3), l, [0]) == 0


@pytest.mark.parametrize("m", [1, 2, 3])
@given(g=multigraphs(min_n=2, max_n=6, max_edges=12))
def test_theta_matches_enumeration_uniform(m, g):
    l = SetFunction.uniform(m)
    assert theta(g, l) == theta_by_enumeration(g, l)
    assert partition_connected_components(g, l) == brute_components(g, l)
    assert is_partition_connected(g, l) == is_tree_connected(g, m)


@given(multigraphs(min_n=2, max_n=5, max_edges=10), st.fractions(Fraction(1, 3), Fraction(3), max_denominator=4))
def test_theta_matches_enumeration_fractional(g, c):
    l = SetFunction.uniform(c)
    assert theta(g, l) == theta_by_enumeration(g, l)
    assert is_partition_connected(g, l) == is_partition_connected_by_enumeration(g, l)


@given(multigraphs(min_n=2, max_n=5, max_edges=10), st.data())
def test_theta_matches_enumeration_table(g, data):
    # modular part plus a convex function of |A| keeps l intersecting supermodular
    weights = data.draw(st.lists(st.integers(-1, 2), min_size=g.n, max_size=g.n))
    steps = sorted(data.draw(st.lists(st.integers(-2, 2), min_size=g.n, max_size=g.n)))
    convex = [sum(steps[:i]) for i in range(g.n + 1)]
    l = SetFunction.from_callable(g.n, lambda a: sum(weights[v] for v in a) + convex[len(a)])
    assert is_intersecting_supermodular(l, g.n)
    assert theta(g, l) == theta_by_enumeration(g, l)
    assert partition_connected_components(g, l) == brute_components(g, l)


@given(multigraphs(min_n=2, max_n=6, max_edges=12), st.integers(1, 2))
def test_components_are_partition_connected(g, m):
    l = SetFunction.uniform(m)
    for part in partition_connected_components(g, l):
        if len(part) > 1:
            sub, _ = g.induced(part)
            assert is_tree_connected(sub, m)


@given(multigraphs(min_n=2, max_n=6, max_edges=12), st.integers(1, 2))
def test_theta_is_at_least_l_of_v_with_equality_iff_connected(g, m):
    l = SetFunction.uniform(m)
    value = theta(g, l)
    assert value >= m
    assert (value == m) == is_tree_connected(g, m)


def test_doubled_cycle_is_two_tree_connected():
    assert is_partition_connected(doubled(cycle(5)), SetFunction.uniform(2))
