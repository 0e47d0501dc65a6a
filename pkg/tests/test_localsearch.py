import math

import pytest
from hypothesis import given, strategies as st

from divstr.dag import dag_from_strings
from divstr.localsearch import (InfeasibleError, farthest_string, iteration_budget, local_search_maxsum,
                                ptas_maxsum, sample_paths)
from divstr.oracle import brute_diverse, brute_farthest
from divstr.strings import InvalidInputError, StringSet, div_sum, hamming

from helpers import string_sets


def test_farthest_fixtures(pair_trie):
    y, v = farthest_string(pair_trie, ["ABADD"], 5)
    assert v == 3 and hamming(y, "ABADD") == 3
    y, v = farthest_string(pair_trie, ["ABADD", "ABAEE"], 10)
    assert v == 4
    y, v = farthest_string(pair_trie, [], 5)
    assert v == 0


def test_farthest_respects_cap(pair_trie):
    _, v = farthest_string(pair_trie, ["ABADD", "ABAEE"], 2)
    assert v == 2


def test_farthest_avoids_forbidden(pair_trie):
    y, v = farthest_string(pair_trie, ["ABADD"], 5, forbidden=["ABBEE", "ABCEE"])
    assert y not in {tuple("ABBEE"), tuple("ABCEE")}
    assert v == 2
    g = dag_from_strings(StringSet.of(["AB"]))
    assert farthest_string(g, ["AB"], 2, forbidden=["AB"]) == (None, -1)


def test_farthest_rejects_bad_lengths(pair_trie):
    with pytest.raises(InvalidInputError):
        farthest_string(pair_trie, ["ABA"], 3)


def test_iteration_budget_values():
    assert [iteration_budget(K) for K in range(1, 6)] == [0, 0, 3, 7, 12]


def test_sample_paths_are_distinct_and_seeded(pair_trie):
    a = sample_paths(pair_trie, 4, seed=3)
    assert len(set(a)) == 4
    assert a == sample_paths(pair_trie, 4, seed=3)


def test_local_search_whole_language(pair_trie):
    chosen = local_search_maxsum(pair_trie, 6)
    assert sorted("".join(w) for w in chosen) == ["ABADD", "ABAEE", "ABBDD", "ABBEE", "ABCDD", "ABCEE"]


def test_ptas_branches(pair_trie):
    stats = {}
    chosen, value = ptas_maxsum(pair_trie, 3, 0.1, stats=stats)
    assert stats["branch"] == "exact" and value == 7 == div_sum(chosen)
    stats = {}
    chosen, value = ptas_maxsum(pair_trie, 3, 0.7, stats=stats)
    assert stats["branch"] == "local" and value >= math.ceil(0.3 * 7)


def test_ptas_errors(pair_trie):
    with pytest.raises(InfeasibleError):
        ptas_maxsum(pair_trie, 7, 0.5)
    with pytest.raises(InvalidInputError):
        ptas_maxsum(pair_trie, 2, 1.5)


@given(string_sets(max_size=8, min_size=1), st.data())
def test_farthest_matches_oracle(L, data):
    refs = data.draw(st.lists(st.sampled_from(L.members), min_size=0, max_size=4))
    _, expected = brute_farthest(L, refs)
    y, v = farthest_string(dag_from_strings(L), refs, L.r * max(1, len(refs)))
    assert v == expected == sum(hamming(x, y) for x in refs)


@given(string_sets(max_size=8, min_size=2), st.integers(2, 5), st.sampled_from([0.1, 0.3, 0.5, 0.9]),
       st.integers(0, 3))
def test_ptas_guarantee(L, K, eps, seed):
    if K > len(L):
        K = len(L)
    chosen, value = ptas_maxsum(dag_from_strings(L), K, eps, seed)
    assert len(set(chosen)) == K and set(chosen) <= set(L.members)
    _, opt, _ = brute_diverse(L, K, 0, "maxsum", semantics="set")
    assert value >= math.ceil((1 - eps) * opt)
