import pytest
from hypothesis import given, settings

from eccentree.enumeration import free_trees
from eccentree.errors import InfeasibleParams, VertexOutOfRange
from eccentree.families import p_t_ab, t_n_beta
from eccentree.parameters import (
    ParamClass,
    Selector,
    bipartition,
    bipartition_sizes,
    domination_number,
    is_perfectly_matched,
    matching_number,
    pendant_count,
)
from eccentree.tree import Tree, path, star

from oracles import max_matching, min_dominating
from strategies import prufer_trees


def test_pendant_counts():
    assert pendant_count(path(5)) == 2
    assert pendant_count(star(6)) == 5
    assert pendant_count(t_n_beta(7, 3)) == 4


def test_matching_examples():
    for n in range(2, 9):
        assert matching_number(star(n)) == 1
    assert matching_number(path(5)) == 2
    assert matching_number(t_n_beta(7, 3)) == 3
    assert matching_number(Tree.from_edges(1, [])) == 0


def test_perfectly_matched():
    assert is_perfectly_matched(path(2), 0)
    s4 = star(4)
    assert is_perfectly_matched(s4, 0)
    assert not any(is_perfectly_matched(s4, v) for v in (1, 2, 3))
    with pytest.raises(VertexOutOfRange):
        is_perfectly_matched(s4, 9)


def test_domination_examples():
    assert domination_number(star(7)) == 1
    assert domination_number(path(6)) == 2
    assert domination_number(path(7)) == 3
    assert domination_number(Tree.from_edges(1, [])) == 1


def test_bipartition_examples():
    assert bipartition_sizes(path(4)) == (2, 2)
    assert bipartition_sizes(star(6)) == (1, 5)
    assert bipartition_sizes(p_t_ab(2, 2, 2)) == (3, 3)


def test_dps_match_brute_force_exhaustive():
    for n in range(1, 10):
        for t in free_trees(n):
            edges = t.edges()
            assert matching_number(t) == max_matching(n, edges)
            assert domination_number(t) == min_dominating(n, edges)


@settings(max_examples=200, deadline=None)
@given(prufer_trees(12))
def test_dps_random_labelings(t):
    assert matching_number(t) == max_matching(t.n, t.edges())
    assert domination_number(t) == min_dominating(t.n, t.edges())
    p, q = bipartition_sizes(t)
    assert p + q == t.n and p <= q
    assert domination_number(t) <= matching_number(t)


@settings(max_examples=200, deadline=None)
@given(prufer_trees(12))
def test_perfectly_matched_by_brute_force(t):
    beta = max_matching(t.n, t.edges())
    for v in range(t.n):
        # covered by every maximum matching <=> no maximum matching avoids v
        rest = [e for e in t.edges() if v not in e]
        assert is_perfectly_matched(t, v) == (max_matching(t.n, rest) < beta)


def test_class_parsing():
    c = ParamClass.parse("bipartition=5,4")
    assert c.selector is Selector.BIPARTITION and c.args == (4, 5)
    assert str(c) == "bipartition=4,5"
    assert ParamClass.parse("matching=3") == ParamClass("matching", (3,))
    assert str(ParamClass.parse(" Diameter = 4 ")) == "diameter=4"
    assert bipartition(5, 4).matches(p_t_ab(2, 3, 4))
    for bad in ("matching", "matching=1,2", "girth=3", "pendants=-1"):
        with pytest.raises(InfeasibleParams):
            ParamClass.parse(bad)
