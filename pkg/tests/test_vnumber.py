import pytest
from hypothesis import given, settings

from cnideal.bits import from_indices, members, size
from cnideal.domination import invariants, minimal_dominating_sets
from cnideal.graph import Graph, complete, complete_multipartite, disjoint_union, hamming_graph, path, cycle
from cnideal.monomial import as_variable_prime, closed_neighborhood_ideal, colon_by_subset, v_number_bruteforce
from cnideal.vnumber import NotMinimalDominating, v_number, v_number_local

from conftest import graphs


@pytest.mark.parametrize(
    "g, value",
    [
        (path(6), 2),
        (path(3), 1),
        (complete(5), 4),
        (complete_multipartite(2, 3), 2),
        (complete_multipartite(3, 3, 2), 5),
        (hamming_graph(3, 2), 4),
        (Graph(1, (0,)), 0),
    ],
)
def test_known_values(g, value):
    assert v_number(g).value == value


def test_p6_witness():
    w = v_number(path(6))
    assert list(members(w.d)) == [1, 4]
    assert list(members(w.u)) == [0, 5]
    assert w.to_json()["expansion"] == [0, 5]


def test_local_values():
    k23 = complete_multipartite(2, 3)
    assert v_number_local(k23, from_indices([2, 3, 4])).value == 2
    assert v_number_local(k23, from_indices([0, 1])).value == 3
    assert v_number_local(k23, from_indices([0, 2])).value == 3
    for n in range(2, 7):
        assert v_number_local(complete(n), from_indices([0])).value == n - 1


def test_local_rejects_non_minimal():
    with pytest.raises(NotMinimalDominating):
        v_number_local(path(3), from_indices([0, 1, 2]))
    with pytest.raises(ValueError):
        v_number_local(path(3), from_indices([0]))


def test_local_witness_realizes_prime():
    g = complete_multipartite(2, 2, 3)
    ideal = closed_neighborhood_ideal(g)
    for d in minimal_dominating_sets(g):
        w = v_number_local(g, d)
        assert size(w.u) == size(d)
        assert w.expansion == g.closed_neighborhood(w.u) & ~d
        assert as_variable_prime(colon_by_subset(ideal, w.expansion)) == d


def test_components_add_up():
    g = disjoint_union(path(6), complete(4), Graph(1, (0,)))
    w = v_number(g)
    assert w.value == 2 + 3 + 0
    assert [c["value"] for c in w.to_json()["per_component"]] == [2, 3, 0]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_formula_matches_colon_oracle(g):
    assert v_number(g).value == v_number_bruteforce(g)[0]


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8, connected=True))
def test_bounds(g):
    v = v_number(g).value
    rep = invariants(g)
    if g.n > 1:
        assert rep.gamma <= v
    assert v <= rep.tau
    assert v <= 2 * rep.matching


def test_cycles():
    # independent check against the colon oracle on a family
    for n in range(3, 10):
        assert v_number(cycle(n)).value == v_number_bruteforce(cycle(n))[0]
