import json
from fractions import Fraction

import pytest
from hypothesis import given

from partconn.errors import CapacityError
from partconn.generators import complete, complete_bipartite, cycle, doubled, path, petersen
from partconn.graph import MultiGraph
from partconn.oracles import toughness_by_enumeration
from partconn.toughness import UNBOUNDED, is_t_tough, toughness

from conftest import multigraphs


@pytest.mark.parametrize(
    "g, value",
    [(cycle(4), Fraction(1)), (complete_bipartite(3, 3), Fraction(1)), (petersen(), Fraction(4, 3)), (cycle(7), Fraction(1)), (path(3), Fraction(1, 2))],
)
def test_frozen_values(g, value):
    report = toughness(g)
    assert report.value == value
    assert Fraction(len(report.separator), report.omega) == value
    assert toughness_by_enumeration(g)[0] == value


def test_witnesses():
    assert toughness(cycle(4)).separator in {frozenset({0, 2}), frozenset({1, 3})}
    r = toughness(complete_bipartite(3, 3))
    assert r.omega == 3 and len(r.separator) == 3
    assert str(toughness(cycle(4))) == "S = {0, 2}, omega = 2, t = 1/1"


def test_complete_graphs_unbounded():
    for g in (complete(4), doubled(complete(3)), MultiGraph(1)):
        r = toughness(g)
        assert r.unbounded and r.value == UNBOUNDED
    assert toughness(complete(4)).to_json() == {"value": "unbounded"}


def test_disconnected_is_zero():
    r = toughness(MultiGraph.from_pairs(4, [(0, 1), (2, 3)]))
    assert r.value == 0 and r.separator == frozenset()


def test_is_t_tough():
    assert is_t_tough(cycle(4), 1)
    assert not is_t_tough(cycle(4), Fraction(3, 2))
    assert is_t_tough(complete(4), 100)


def test_capacity():
    with pytest.raises(CapacityError):
        toughness(cycle(17))


def test_json():
    doc = toughness(petersen()).to_json()
    assert doc["value"] == "4/3" and doc["omega"] * 4 == len(doc["separator"]) * 3
    json.dumps(doc)


@given(multigraphs(min_n=1, max_n=8, max_edges=16))
def test_matches_reference(g):
    value, _ = toughness_by_enumeration(g)
    r = toughness(g)
    if value is None:
        assert r.unbounded
    else:
        assert r.value == value


@given(multigraphs(min_n=2, max_n=7, max_edges=14))
def test_parallel_edges_irrelevant(g):
    assert toughness(g).value == toughness(doubled(g)).value
