import networkx as nx
import pytest
from hypothesis import given

from cnideal import corpus
from cnideal.bits import from_indices, members
from cnideal.graph import (
    CapacityError,
    Graph,
    Graph6Error,
    complete,
    complete_multipartite,
    connected_components,
    cycle,
    disjoint_union,
    from_edge_list,
    from_graph6,
    hamming_graph,
    is_bipartite,
    is_chordal,
    is_connected,
    is_tree,
    is_very_well_covered,
    maximal_independent_sets,
    parse_family,
    path,
    read_graph6_lines,
    to_edge_list,
    to_graph6,
    word_index,
)

from conftest import all_upto6, all_upto7, graphs


def test_graph6_single_vertex():
    g = from_graph6("@")
    assert g.n == 1 and g.num_edges == 0
    assert to_graph6(g) == "@"


def test_graph6_matches_networkx_on_atlas():
    for g in all_upto7():
        h = corpus.to_networkx(g)
        ref = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert to_graph6(g) == ref
        assert from_graph6(ref) == g


def test_graph6_long_form_roundtrip():
    g = path(70)
    text = to_graph6(g)
    assert text.startswith("~")
    assert from_graph6(text) == g
    assert text == nx.to_graph6_bytes(corpus.to_networkx(g), header=False).decode().strip()


def test_graph6_header_accepted():
    assert from_graph6(">>graph6<<Bw") == complete(3)


@pytest.mark.parametrize("text, offset", [("B!", 1), ("D?", 2), ("Bww", 2)])
def test_graph6_errors_report_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        from_graph6(text)
    assert info.value.offset == offset
    assert f"byte offset {offset}" in str(info.value)


def test_read_graph6_lines_keeps_going():
    out = list(read_graph6_lines(["Bw\n", "B!\n", "\n", "@\n"]))
    assert [lineno for lineno, _, _ in out] == [1, 2, 4]
    assert isinstance(out[1][2], Graph6Error)
    assert out[2][2].n == 1


def test_edge_list_roundtrip():
    g = from_edge_list("# a path\n0 1\n1 2\n4\n")
    assert g.n == 5 and sorted(g.edges()) == [(0, 1), (1, 2)]
    assert from_edge_list(to_edge_list(g)) == g


def test_sample7_neighborhoods(sample7):
    assert list(members(sample7.closed_neighborhood(from_indices([3])))) == [2, 3, 4, 5]
    assert sample7.closed_neighborhood(from_indices([0, 3, 5])) == sample7.vertices
    assert sample7.open_neighborhood(from_indices([3])) == from_indices([2, 4, 5])
    assert sample7.label(0) == "v1"


def test_capacity_limit():
    with pytest.raises(CapacityError):
        Graph.from_edges(129, [])
    assert Graph.from_edges(128, []).n == 128


def test_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))


def test_families():
    assert path(6).num_edges == 5
    assert cycle(5).num_edges == 5
    assert complete(5).num_edges == 10
    k = complete_multipartite(3, 3, 2)
    assert k.n == 8 and k.num_edges == 9 + 6 + 6
    assert k.label(0) == "v1_1" and k.label(7) == "v3_2"
    h = hamming_graph(3, 2)
    assert h.n == 8 and h.num_edges == 12
    assert h.label(word_index((1, 0, 1), 2)) == "101"
    assert parse_family("kpartite:2,3") == complete_multipartite(2, 3)
    assert parse_family("hamming:2,3") == hamming_graph(2, 3)
    with pytest.raises(ValueError):
        parse_family("nope:3")
    with pytest.raises(ValueError):
        hamming_graph(2, 6)


def test_hamming_graph_is_regular():
    h = hamming_graph(2, 4)
    assert all(h.degree(v) == 2 * 3 for v in range(h.n))
    ref = nx.hamming_graph(2, 4) if hasattr(nx, "hamming_graph") else None
    if ref is not None:
        assert nx.is_isomorphic(corpus.to_networkx(h), ref)


def test_predicates():
    assert is_tree(path(5)) and not is_tree(cycle(5))
    assert is_bipartite(cycle(6)) and not is_bipartite(cycle(5))
    assert is_chordal(complete(4)) and not is_chordal(cycle(4))
    assert not is_very_well_covered(cycle(6))
    assert is_very_well_covered(path(2))
    assert is_very_well_covered(path(4))
    assert not is_connected(disjoint_union(path(2), path(3)))


def test_components_carry_origin():
    g = disjoint_union(path(2), complete(3))
    parts = connected_components(g)
    assert [p.n for p in parts] == [2, 3]
    assert parts[1].lift(parts[1].vertices) == from_indices([2, 3, 4])


@given(graphs(max_n=8))
def test_predicates_agree_with_networkx(g):
    h = corpus.to_networkx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert is_chordal(g) == nx.is_chordal(h)
    assert is_tree(g) == nx.is_tree(h)
    assert from_graph6(to_graph6(g)) == g


@given(graphs(max_n=8))
def test_maximal_independent_sets_agree_with_networkx(g):
    h = nx.complement(corpus.to_networkx(g))
    ref = sorted(tuple(sorted(c)) for c in nx.find_cliques(h))
    assert sorted(tuple(members(s)) for s in maximal_independent_sets(g)) == ref


def test_very_well_covered_counts_on_small_graphs():
    # vwc: no isolated vertices, every maximal independent set has size n/2
    for g in all_upto6():
        h = corpus.to_networkx(g)
        sizes = {len(c) for c in nx.find_cliques(nx.complement(h))}
        ref = g.n % 2 == 0 and min(dict(h.degree()).values()) > 0 and sizes == {g.n // 2}
        assert is_very_well_covered(g) == ref
