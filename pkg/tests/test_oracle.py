import pytest
from gmpy2 import mpq

from properunit import oracle
from properunit.core import Graph, Representation, intersection_graph, is_unit
from properunit.orders import Poset, find_two_plus_two, interval_order_of

R = Representation.from_pairs


# -- enumerators -------------------------------------------------------------------

@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_graph_counts(n, count):
    graphs = list(oracle.enumerate_graphs(n))
    assert len(graphs) == count
    assert len(set(graphs)) == count


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 3), (3, 19), (4, 219), (5, 4231)])
def test_poset_counts(n, count):
    posets = list(oracle.enumerate_posets(n))
    assert len(posets) == count
    assert len(set(posets)) == count


@pytest.mark.parametrize("n", range(0, 5))
def test_posets_match_naive_filter(n):
    assert set(oracle.enumerate_posets(n)) == set(oracle.enumerate_relations_naive(n))


def test_enumeration_is_deterministic():
    assert list(oracle.enumerate_posets(4)) == list(oracle.enumerate_posets(4))
    first = [g.adj for g in oracle.enumerate_graphs(4)]
    assert first == [g.adj for g in oracle.enumerate_graphs(4)]


# -- caps ------------------------------------------------------------------------------

def test_caps_raise():
    with pytest.raises(oracle.CapExceeded):
        next(oracle.enumerate_graphs(9))
    with pytest.raises(oracle.CapExceeded):
        oracle.unit_rep_feasible(Graph.path(8))
    with pytest.raises(oracle.CapExceeded):
        oracle.interval_rep_of_poset(Poset.chain(7))
    assert oracle.unit_rep_feasible(Graph.path(8), cap=8) is not None


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("PROPERUNIT_ORACLE_CAP", "3")
    with pytest.raises(oracle.CapExceeded):
        oracle.interval_rep_brute(Graph.path(4))
    monkeypatch.setenv("PROPERUNIT_ORACLE_CAP", "10")
    assert oracle.interval_rep_brute(Graph.path(9)) is not None


# -- interval recognition --------------------------------------------------------------

def test_cycle_is_not_interval():
    assert oracle.interval_rep_brute(Graph.cycle(4)) is None
    assert oracle.unit_rep_feasible(Graph.cycle(4)) is None


def test_triangle():
    assert oracle.interval_rep_brute(Graph.complete(3)) == R([(0, 0)] * 3)
    assert is_unit(oracle.unit_rep_feasible(Graph.complete(3)))


@pytest.mark.parametrize(
    "g, interval, unit",
    [
        (Graph.path(4), True, True),
        (Graph.path(3), True, True),
        (Graph.complete(2), True, True),
        (Graph.star(3), True, False),
        (Graph.cycle(5), False, False),
        (Graph(0), True, True),
        (Graph(3), True, True),
    ],
)
def test_oracle_verdicts(g, interval, unit):
    rep = oracle.interval_rep_brute(g)
    assert (rep is not None) == interval
    if rep is not None:
        assert intersection_graph(rep) == g
    urep = oracle.unit_rep_feasible(g)
    assert (urep is not None) == unit
    if urep is not None:
        assert is_unit(urep) and intersection_graph(urep) == g


def test_maximal_cliques_of_path():
    assert oracle.maximal_cliques(Graph.path(4)) == [0b0011, 0b0110, 0b1100]


@pytest.mark.parametrize("n", range(0, 6))
def test_every_found_representation_realises_its_graph(n):
    for g in oracle.enumerate_graphs(n):
        rep = oracle.interval_rep_brute(g)
        if rep is not None:
            assert intersection_graph(rep) == g
        urep = oracle.unit_rep_feasible(g)
        if urep is not None:
            assert rep is not None
            assert is_unit(urep) and intersection_graph(urep) == g


# -- difference constraints ---------------------------------------------------------

def test_difference_constraints_strict_cycle():
    # x1 - x0 < 0 and x0 - x1 <= 0 cannot both hold
    assert oracle.solve_difference_constraints(2, [(0, 1, 0, True), (1, 0, 0, False)]) is None


def test_difference_constraints_feasible():
    # 0 < x1 - x0 <= 1
    x = oracle.solve_difference_constraints(2, [(0, 1, 1, False), (1, 0, 0, True)])
    assert x is not None
    assert 0 < x[1] - x[0] <= 1
    # x1 - x0 <= 1 together with x1 - x0 > 1
    assert oracle.solve_difference_constraints(2, [(0, 1, 1, False), (1, 0, -1, True)]) is None


def test_value_function_feasible():
    assert oracle.value_function_feasible(Poset.one_plus_three()) is None
    f = oracle.value_function_feasible(Poset.chain(2))
    assert f[1] - f[0] > 1


# -- interval orders ------------------------------------------------------------------

def test_interval_rep_of_poset_chain():
    assert oracle.interval_rep_of_poset(Poset.chain(3)) == R([(0, 0), (1, 1), (2, 2)])


def test_interval_rep_of_poset_two_plus_two():
    assert oracle.interval_rep_of_poset(Poset.two_plus_two()) is None


@pytest.mark.parametrize("n", range(0, 6))
def test_interval_rep_of_poset_matches_two_plus_two(n):
    for p in oracle.enumerate_posets(n):
        rep = oracle.interval_rep_of_poset(p)
        assert (rep is None) == (find_two_plus_two(p) is not None)
        if rep is not None:
            assert interval_order_of(rep) == p


def test_unit_rep_components_are_separated():
    g = Graph(4, [(0, 1), (2, 3)])
    rep = oracle.unit_rep_feasible(g)
    assert intersection_graph(rep) == g
    assert all(iv.length == mpq(1) for iv in rep)
