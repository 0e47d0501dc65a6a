"""Naive exhaustive reference implementations.

Nothing here imports the optimized solvers or the distance helpers of
``divstr.strings``; keep it that way so the oracles stay independent.
"""
from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .strings import StringSet, Word, as_word


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_tuples: int = 10**6
    max_subsequences: int = 2**20
    seconds: float = 10.0

    @classmethod
    def default(cls) -> "OracleBudget":
        ms = os.environ.get("DIVSTR_BUDGET_MS")
        if ms:
            return cls(seconds=int(ms) / 1000)
        return cls()


class _Clock:
    def __init__(self, budget: OracleBudget):
        self.deadline = time.monotonic() + budget.seconds

    def tick(self):
        if time.monotonic() > self.deadline:
            raise BudgetExceeded("oracle time ceiling reached")


def _dist(x, y):
    n = 0
    for a, b in zip(x, y):
        if a != b:
            n += 1
    return n


def _value(group, mode):
    ds = [_dist(group[i], group[j]) for i in range(len(group)) for j in range(i + 1, len(group))]
    if mode == "maxsum":
        return sum(ds)
    return min(ds) if ds else math.inf


def brute_diverse(L: StringSet, K: int, delta: int, mode: str, semantics: str = "tuple",
                  budget: OracleBudget | None = None):
    """Exhaustive search over K-multisets (``tuple``) or K-subsets (``set``) of L.

    Returns ``(decision, optimum, witness)``. With set semantics and
    ``|L| < K`` there is no candidate: the optimum is ``None`` and the answer NO.
    """
    budget = budget or OracleBudget.default()
    if mode not in ("maxmin", "maxsum") or semantics not in ("tuple", "set"):
        raise ValueError(f"bad mode/semantics {mode!r}/{semantics!r}")
    n = len(L)
    count = math.comb(n + K - 1, K) if semantics == "tuple" else math.comb(n, K)
    if count > budget.max_tuples:
        raise BudgetExceeded(f"{count} candidate tuples exceed budget {budget.max_tuples}")
    clock = _Clock(budget)
    order = sorted(L.members, key=L.alphabet.sort_key)
    pick = combinations_with_replacement if semantics == "tuple" else combinations
    best, best_group = None, None
    for i, group in enumerate(pick(order, K)):
        if i % 4096 == 0:
            clock.tick()
        v = _value(group, mode)
        if best is None or v > best:
            best, best_group = v, list(group)
    if best is None:
        return False, None, None
    return best >= delta, best, best_group


def is_subsequence(x, y) -> bool:
    it = iter(y)
    return all(any(c == d for d in it) for c in x)


def brute_lcs_set(S1, S2, budget: OracleBudget | None = None) -> set[Word]:
    """All distinct longest common subsequences of two strings.

    Short inputs: every subsequence of the shorter string is generated and
    tested against the other. When that exceeds the subsequence budget, an
    exhaustive memoized recursion over suffix pairs is used instead.
    """
    budget = budget or OracleBudget.default()
    a, b = as_word(S1), as_word(S2)
    if len(a) > len(b):
        a, b = b, a
    if 2 ** len(a) <= budget.max_subsequences:
        return _lcs_by_subsequences(a, b, _Clock(budget))
    return _lcs_by_recursion(a, b, _Clock(budget))


def _lcs_by_subsequences(a, b, clock) -> set[Word]:
    best = 0
    found: set[Word] = set()
    for mask in range(1 << len(a)):
        if mask % 4096 == 0:
            clock.tick()
        size = bin(mask).count("1")
        if size < best:
            continue
        sub = tuple(a[i] for i in range(len(a)) if mask >> i & 1)
        if is_subsequence(sub, b):
            if size > best:
                best, found = size, set()
            found.add(sub)
    return found


def _lcs_by_recursion(a, b, clock) -> set[Word]:
    @lru_cache(maxsize=None)
    def rec(i, j) -> frozenset:
        clock.tick()
        if i == len(a) or j == len(b):
            return frozenset([()])
        if a[i] == b[j]:
            return frozenset((a[i],) + w for w in rec(i + 1, j + 1))
        left, right = rec(i + 1, j), rec(i, j + 1)
        ll, lr = len(next(iter(left))), len(next(iter(right)))
        if ll > lr:
            return left
        if lr > ll:
            return right
        return left | right

    return set(rec(0, 0))


def brute_lcs_length(S) -> int:
    """LCS length of any number of strings via subsequences of the shortest one."""
    words = sorted((as_word(x) for x in S), key=len)
    a = words[0]
    best = 0
    for mask in range(1 << len(a)):
        sub = tuple(a[i] for i in range(len(a)) if mask >> i & 1)
        if len(sub) > best and all(is_subsequence(sub, w) for w in words[1:]):
            best = len(sub)
    return best


def brute_farthest(L: StringSet, Xprime, budget: OracleBudget | None = None):
    """Member of L maximizing the distance sum to ``Xprime``; ties go to the lexicographically least."""
    budget = budget or OracleBudget.default()
    if len(L) > budget.max_tuples:
        raise BudgetExceeded("string set exceeds budget")
    refs = [as_word(x) for x in Xprime]
    best, arg = None, None
    for y in sorted(L.members, key=L.alphabet.sort_key):
        v = sum(_dist(x, y) for x in refs)
        if best is None or v > best:
            best, arg = v, y
    return arg, best


def brute_matching_3dm(n: int, triples, budget: OracleBudget | None = None) -> bool:
    """Is there a family of n coordinate-disjoint triples?"""
    budget = budget or OracleBudget.default()
    triples = list(triples)
    if math.comb(len(triples), n) > budget.max_tuples:
        raise BudgetExceeded("too many triple subfamilies")
    for group in combinations(triples, n):
        if all(len({t[k] for t in group}) == n for k in range(3)):
            return True
    return False


def brute_clique(n: int, edges, K: int, budget: OracleBudget | None = None) -> bool:
    budget = budget or OracleBudget.default()
    if math.comb(n, K) > budget.max_tuples:
        raise BudgetExceeded("too many vertex subsets")
    es = {tuple(sorted(e)) for e in edges}
    for group in combinations(range(1, n + 1), K):
        if all((u, v) in es for u, v in combinations(group, 2)):
            return True
    return False
