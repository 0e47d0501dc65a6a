import pytest
from hypothesis import given

from divstr.dag import InconsistentDepthError, dag_from_strings, language
from divstr.formats import (format_3dm, format_dag, format_graph, format_words, parse_3dm, parse_dag,
                            parse_graph, parse_words)
from divstr.reductions import ThreeDMInstance, UGraph
from divstr.strings import InvalidInputError, StringSet

from helpers import string_sets


def test_words_with_and_without_separators():
    alphabet, words = parse_words("# comment\nalphabet A B\nABBA\nA B B A   # same\n\n")
    assert alphabet.symbols == ("A", "B")
    assert words == [tuple("ABBA")] * 2


def test_multichar_tokens():
    _, words = parse_words("alphabet a:1 b:1\na:1 b:1\n")
    assert words == [("a:1", "b:1")]


def test_words_errors():
    with pytest.raises(InvalidInputError):
        parse_words("ABBA\n")
    with pytest.raises(InvalidInputError):
        parse_words("alphabet A B\nABC\n")
    with pytest.raises(InvalidInputError):
        parse_words("")


def test_dag_round_trip(pair_dag):
    g = parse_dag(format_dag(pair_dag))
    assert language(g) == language(pair_dag)
    assert g.r == pair_dag.r and g.size == pair_dag.size


def test_dag_directive_errors():
    with pytest.raises(InvalidInputError):
        parse_dag("dag 1\nalphabet A\nvertex s\nedge s A t\n")
    with pytest.raises(InvalidInputError):
        parse_dag("dag 1\nalphabet A\nvertex s\nvertex t\nedge s B t\n")
    with pytest.raises(InvalidInputError):
        parse_dag("dag 1\nalphabet A\nvertex s\nvertex s\n")
    with pytest.raises(InvalidInputError):
        parse_dag("dag 1\nalphabet A\nvertex s\nvertex t\nlink s t\n")


def test_non_layered_dag_file():
    text = "dag 2\nalphabet a b\nvertex s\nvertex x\nvertex t\nedge s a x\nedge x b t\nedge s b t\n"
    with pytest.raises(InconsistentDepthError):
        parse_dag(text)


def test_3dm_and_graph_round_trip():
    inst = ThreeDMInstance(2, ((1, 1, 1), (2, 1, 2)))
    assert parse_3dm(format_3dm(inst)) == inst
    g = UGraph(4, frozenset({(2, 1), (3, 4)}))
    assert parse_graph(format_graph(g)) == g
    with pytest.raises(InvalidInputError):
        parse_graph("4\n1 2\n")
    with pytest.raises(InvalidInputError):
        parse_3dm("n 2\n1 2\n")


@given(string_sets(max_size=8))
def test_string_set_round_trip(L):
    alphabet, words = parse_words(format_words(L.alphabet, L.members, "header"))
    assert StringSet(alphabet, tuple(words)) == L


@given(string_sets(max_size=8))
def test_trie_file_round_trip(L):
    g = dag_from_strings(L)
    assert language(parse_dag(format_dag(g))) == set(L.members)
