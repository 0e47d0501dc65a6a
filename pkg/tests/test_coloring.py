import math

import pytest
from hypothesis import given, strategies as st

from divstr import exact
from divstr.coloring import (Coloring, build_colored_trie, default_repetitions, fpt_solve, pull_back,
                             random_coloring, success_probability)
from divstr.dag import dag_from_strings, language
from divstr.strings import InvalidInputError, StringSet, diversity

from helpers import string_sets


def coloring_of(table):
    return Coloring(dict(table), len(set(table.values())))


def test_two_color_trie_collapses_six_lcs(pair_dag):
    c = coloring_of({"A": 0, "B": 0, "C": 0, "D": 1, "E": 1})
    trie = build_colored_trie(pair_dag, c)
    assert language(trie.dag) == {tuple("00011")}
    assert trie.size == 5


def test_injective_coloring_keeps_all_strings(pair_dag):
    c = coloring_of({"A": 0, "B": 1, "C": 2, "D": 3, "E": 4})
    assert c.injective
    trie = build_colored_trie(pair_dag, c)
    assert len(language(trie.dag)) == 6


def test_phi_points_at_original_vertices(pair_dag):
    c = coloring_of({"A": 0, "B": 1, "C": 2, "D": 3, "E": 4})
    trie = build_colored_trie(pair_dag, c)
    assert trie.phi[trie.dag.source] == {pair_dag.source}
    assert trie.phi[trie.dag.sink] == {pair_dag.sink}


def test_trie_can_exceed_k_pow_r_edges():
    # {00, 01, 11}: the two first-layer vertices have different suffix sets, so 5 edges are needed
    g = dag_from_strings(StringSet.of(["00", "01", "11"]))
    trie = build_colored_trie(g, coloring_of({"0": 0, "1": 1}))
    assert trie.size == 5 > 2 ** 2


def test_pull_back_least_preimage(pair_dag):
    c = coloring_of({"A": 0, "B": 0, "C": 0, "D": 1, "E": 1})
    assert pull_back(pair_dag, c, ("0", "0", "0", "1", "1")) == tuple("ABADD")
    with pytest.raises(InvalidInputError):
        pull_back(pair_dag, c, ("1", "0", "0", "1", "1"))


def test_random_coloring_is_seeded(pair_dag):
    a = random_coloring(pair_dag.alphabet, 10, 7)
    assert a == random_coloring(pair_dag.alphabet, 10, 7)
    assert set(a.colors.values()) <= set(range(10))


def test_repetition_budget():
    assert success_probability(1, 1) == 1.0
    assert math.isclose(success_probability(2, 1), 0.5)
    assert default_repetitions(2, 1) == math.ceil(math.log(100) / 0.5)
    assert default_repetitions(5, 3, cap=50) == 50


def test_fpt_fixtures(pair_dag):
    res = fpt_solve(pair_dag, 2, 3, seed=0)
    assert res and res.stats["repetitions"] == 1 and res.achieved == 3
    assert not fpt_solve(pair_dag, 3, 2, seed=0, repetitions=20)
    assert not fpt_solve(pair_dag, 2, 6)


def test_fpt_parallel_matches_serial(pair_dag):
    a = fpt_solve(pair_dag, 3, 1, mode="maxmin", seed=5, repetitions=8)
    b = fpt_solve(pair_dag, 3, 1, mode="maxmin", seed=5, repetitions=8, workers=2)
    assert a.witness == b.witness and a.stats["repetitions"] == b.stats["repetitions"]


def test_fpt_argument_errors(pair_dag):
    with pytest.raises(InvalidInputError):
        fpt_solve(pair_dag, 2, 1, mode="median")
    with pytest.raises(InvalidInputError):
        fpt_solve(pair_dag, 0, 1)


@given(string_sets(max_size=6, max_r=3), st.integers(1, 3), st.integers(0, 1000))
def test_colored_trie_bound_and_correspondence(L, K, seed):
    # the solver always colors with k = rK
    k = L.r * K
    g = dag_from_strings(L)
    c = random_coloring(L.alphabet, k, seed)
    trie = build_colored_trie(g, c)
    # each colored string contributes at most r edges
    assert trie.size <= L.r * len(language(trie.dag)) <= L.r * k ** L.r
    colored = {tuple(str(c(t)) for t in w) for w in L.members}
    assert language(trie.dag) == colored
    for w in colored:
        pre = pull_back(g, c, w)
        assert pre in set(L.members)
        assert tuple(str(c(t)) for t in pre) == w


@given(string_sets(max_size=6, max_r=3), st.integers(1, 3), st.sampled_from(["maxmin", "maxsum"]),
       st.integers(0, 50), st.data())
def test_fpt_is_sound(L, K, mode, seed, data):
    g = dag_from_strings(L)
    bound = L.r if mode == "maxmin" else L.r * math.comb(K, 2)
    delta = data.draw(st.integers(0, bound))
    res = fpt_solve(g, K, delta, mode, seed=seed, repetitions=5)
    if res:
        assert exact.solve(g, K, delta, mode)
        assert all(w in set(L.members) for w in res.witness)
        assert diversity(res.witness, mode) >= delta
