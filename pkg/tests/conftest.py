import pytest
from hypothesis import settings

from divstr.dag import dag_from_strings
from divstr.lcs_dag import build_lcs_dag
from divstr.strings import StringSet

from helpers import PAIR, PAIR_LCS

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def pair_dag():
    return build_lcs_dag(PAIR)


@pytest.fixture
def pair_lcs_set():
    return StringSet.of(PAIR_LCS)


@pytest.fixture
def pair_trie(pair_lcs_set):
    return dag_from_strings(pair_lcs_set)


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
