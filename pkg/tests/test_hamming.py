import itertools

import pytest

from cnideal.bits import from_indices
from cnideal.domination import (
    domination_number,
    find_efficient_dominating,
    independence_number,
    is_efficient_dominating,
    vertex_cover_number,
)
from cnideal.graph import hamming_graph, is_independent, word_index
from cnideal.hamming import (
    GF,
    CodeParams,
    code_graph,
    galois_field,
    hamming_code,
    hamming_distance,
    hamming_graph_invariants,
    hamming_length,
    hamming_redundancy,
    is_perfect,
    sum_zero_words,
    syndrome_ok,
    v_number_bounds_hamming,
)

H23 = {
    "0000000", "0001011", "0010111", "0011100", "0100110", "0101101", "0110001", "0111010",
    "1000101", "1001110", "1010010", "1011001", "1100011", "1101000", "1110100", "1111111",
}


def test_binary_codes_exact():
    assert hamming_code(2, 2).as_strings() == {"000", "111"}
    assert hamming_code(2, 3).as_strings() == H23


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_fields(q):
    f = galois_field(q)
    for a in range(1, q):
        assert any(f.mul[a][b] == 1 for b in range(q))
    for a, b, c in itertools.product(range(q), repeat=3):
        assert f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]]
    assert all(f.add[a][f.neg[a]] == 0 for a in range(q))


def test_unsupported_fields():
    for q in (6, 10, 11):
        with pytest.raises(ValueError):
            GF(q)


@pytest.mark.parametrize("q, r", [(2, 2), (2, 3), (3, 2), (4, 2), (2, 4), (5, 2), (3, 3), (7, 2)])
def test_codes_are_perfect(q, r):
    code = hamming_code(q, r)
    assert code.params.m == hamming_length(q, r)
    assert len(code.codewords) == q ** code.k == code.size
    assert is_perfect(code.codewords, code.n, q, code.params.t)
    assert all(syndrome_ok(code, w) for w in code.codewords)


def test_minimum_distance_three():
    for q, r in [(2, 3), (3, 2), (4, 2)]:
        words = list(hamming_code(q, r).codewords)
        assert min(hamming_distance(u, v) for u, v in itertools.combinations(words, 2)) == 3


def test_is_perfect_rejects():
    words = hamming_code(2, 3).codewords
    assert not is_perfect(list(words)[:15], 7, 2, 1)
    # right count, overlapping balls
    assert not is_perfect([(0, 0, 0), (0, 0, 1)], 3, 2, 1)


def test_large_code_is_params_only():
    code = hamming_code(2, 5)
    assert code.codewords is None
    assert code.params == CodeParams(31, 26, 3)
    with pytest.raises(ValueError):
        hamming_code(2, 1)


def test_redundancy():
    assert hamming_redundancy(7, 2) == 3
    assert hamming_redundancy(4, 3) == 2
    assert hamming_redundancy(1, 5) == 1
    assert hamming_redundancy(5, 2) is None


@pytest.mark.parametrize("q, r", [(2, 2), (2, 3), (3, 2)])
def test_codes_dominate_efficiently(q, r):
    code = hamming_code(q, r)
    g = code_graph(code)
    assert is_efficient_dominating(g, code.vertex_set())


def test_closed_forms():
    assert {k: hamming_graph_invariants(3, 2)[k] for k in ("gamma", "indep", "tau")} == {"gamma": 2, "indep": 4, "tau": 4}
    assert {k: hamming_graph_invariants(7, 2)[k] for k in ("gamma", "indep", "tau")} == {"gamma": 16, "indep": 64, "tau": 64}
    inv = hamming_graph_invariants(4, 2)
    assert inv["gamma"] == 4 and not inv["gamma_exact"]
    assert hamming_graph_invariants(1, 3)["gamma"] == 1


@pytest.mark.parametrize("m, q", [(2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 3)])
def test_closed_forms_match_search(m, q):
    g = hamming_graph(m, q)
    inv = hamming_graph_invariants(m, q)
    gamma = domination_number(g)[0]
    if inv["gamma_exact"]:
        assert gamma == inv["gamma"]
    else:
        assert gamma >= inv["gamma"]
    assert independence_number(g)[0] == inv["indep"]
    assert vertex_cover_number(g)[0] == inv["tau"]


def test_gamma_of_four_cube():
    # q^m / (1 + m(q-1)) = 16/5, so at least 4; search finds 4
    assert domination_number(hamming_graph(4, 2))[0] == 4


def test_v_bounds():
    assert v_number_bounds_hamming(2, 2) == {"n": 3, "lower": 2, "upper": 4}
    assert v_number_bounds_hamming(2, 3) == {"n": 7, "lower": 16, "upper": 64}
    assert v_number_bounds_hamming(3, 2) == {"n": 4, "lower": 9, "upper": 54}


@pytest.mark.parametrize("m, q", [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3)])
def test_sum_zero_words_are_maximum_independent(m, q):
    words = sum_zero_words(m, q)
    g = hamming_graph(m, q)
    s = from_indices(word_index(w, q) for w in words)
    assert len(words) == q ** (m - 1)
    assert is_independent(g, s)


@pytest.mark.parametrize("m, q", [(3, 2), (7, 2), (4, 3)])
def test_efficient_dominating_search(m, q):
    d = find_efficient_dominating(hamming_graph(m, q))
    assert d is not None and bin(d).count("1") == q ** (m - hamming_redundancy(m, q))
