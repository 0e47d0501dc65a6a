"""Exact layer-synchronous DP over K-tuples of Sigma-DAG paths.

A state at depth d is a K-tuple of depth-d vertices together with the
truncated pairwise distance pattern of some K-tuple of source paths ending
there. Max-min keeps the full upper-triangular pattern, max-sum a single
truncated sum. Only reachable states are stored, one parent record each.
Tuples are kept in non-decreasing lexicographic order, which removes the
K! relabelings of the same multiset without changing any answer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .dag import SigmaDag
from .strings import InvalidInputError, Word, diversity


@dataclass
class SolveResult:
    decision: bool
    witness: list[Word] | None = None
    achieved: int | float | None = None
    stats: dict = field(default_factory=dict)

    def __bool__(self):
        return self.decision


def _check_args(g: SigmaDag, K: int, delta: int):
    g.require_valid()
    if K < 1:
        raise InvalidInputError("K must be at least 1")
    if delta < 0:
        raise InvalidInputError("delta must be non-negative")


def _ordered_moves(g: SigmaDag, vt: tuple[int, ...], tie: int):
    """Edge K-tuples out of ``vt`` that keep the paths in non-decreasing label order.

    Bit i of ``tie`` says paths i and i+1 are still equal; such a pair must
    not step to a smaller label. Yields (labels, targets, new tie mask).
    """
    K = len(vt)
    labels = [0] * K
    targets = [0] * K

    def rec(i, new_tie):
        if i == K:
            yield tuple(labels), tuple(targets), new_tie
            return
        tied = i > 0 and tie >> (i - 1) & 1
        for c, w in g.out[vt[i]]:
            bit = 0
            if tied:
                if c < labels[i - 1]:
                    continue
                bit = (c == labels[i - 1]) << (i - 1)
            labels[i], targets[i] = c, w
            yield from rec(i + 1, new_tie | bit)

    yield from rec(0, 0)


def _run(g: SigmaDag, K: int, start, step, accept):
    """Generic forward sweep over ordered K-tuples of paths.

    Diversity does not depend on the order of the K strings, so only
    lexicographically non-decreasing tuples are explored. A state key is
    ``(tie, U)``: the mask of adjacent pairs whose prefixes are still equal,
    and the pattern. ``step(U, labels)`` maps a pattern and the K edge
    labels to the next pattern (or None to drop it); ``accept(U, tie)``
    tests a sink state. Returns (accepting key, per-depth tables, states).
    """
    full = (1 << (K - 1)) - 1 if K > 1 else 0
    layer = {(g.source,) * K: {(full, start): None}}
    tables = [layer]
    states = 1
    for _ in range(g.r):
        nxt: dict[tuple, dict] = {}
        for vt, pats in layer.items():
            by_tie: dict[int, list] = {}
            for key in pats:
                by_tie.setdefault(key[0], []).append(key)
            for tie, keys in by_tie.items():
                for labels, wt, new_tie in _ordered_moves(g, vt, tie):
                    bucket = nxt.get(wt)
                    if bucket is None:
                        bucket = nxt[wt] = {}
                    for key in keys:
                        Z = step(key[1], labels)
                        if Z is None:
                            continue
                        nkey = (new_tie, Z)
                        if nkey not in bucket:
                            bucket[nkey] = (vt, key, labels)
        layer = nxt
        tables.append(layer)
        states += sum(len(p) for p in layer.values())
    final = layer.get((g.sink,) * K, {})
    hit = next((key for key in final if accept(key[1], key[0])), None)
    return hit, tables, states


def _traceback(g: SigmaDag, K: int, tables, pattern) -> list[Word]:
    syms = g.alphabet.symbols
    cols = []
    vt = (g.sink,) * K
    for d in range(g.r, 0, -1):
        prev_vt, prev_pat, labels = tables[d][vt][pattern]
        cols.append(labels)
        vt, pattern = prev_vt, prev_pat
    cols.reverse()
    return [tuple(syms[col[i]] for col in cols) for i in range(K)]


def solve_maxmin(g: SigmaDag, K: int, delta: int) -> SolveResult:
    """Decide whether some K-tuple of strings in L(g) has all pairwise distances >= delta."""
    _check_args(g, K, delta)
    pairs = list(combinations(range(K), 2))
    if pairs and delta > g.r:
        return SolveResult(False, stats={"states": 0, "reason": "delta exceeds r"})

    def step(U, labels):
        return tuple(min(delta, u + (labels[i] != labels[j])) for u, (i, j) in zip(U, pairs))

    def accept(Z, tie):
        return all(z >= delta for z in Z)

    hit, tables, states = _run(g, K, (0,) * len(pairs), step, accept)
    return _finish(g, K, tables, states, hit, "maxmin")


def solve_maxsum(g: SigmaDag, K: int, delta: int, distinct: bool = False) -> SolveResult:
    """Decide whether some K-tuple of strings in L(g) has truncated distance sum >= delta.

    With ``distinct=True`` the tuple must consist of K distinct strings,
    read off the tie mask of the ordered tuple at the sink.
    """
    _check_args(g, K, delta)
    pairs = list(combinations(range(K), 2))
    if delta > g.r * len(pairs):
        return SolveResult(False, stats={"states": 0, "reason": "delta exceeds r*C(K,2)"})

    def step(U, labels):
        return min(delta, U + sum(labels[i] != labels[j] for i, j in pairs))

    # in an ordered tuple the strings are distinct iff no adjacent pair is tied
    if distinct:
        def accept(Z, tie):
            return Z >= delta and tie == 0
    else:
        def accept(Z, tie):
            return Z >= delta

    start = 0

    hit, tables, states = _run(g, K, start, step, accept)
    return _finish(g, K, tables, states, hit, "maxsum")


def _finish(g, K, tables, states, hit, mode):
    stats = {"states": states, "layers": len(tables)}
    if hit is None:
        return SolveResult(False, stats=stats)
    witness = _traceback(g, K, tables, hit)
    return SolveResult(True, witness, diversity(witness, mode), stats)


def solve(g: SigmaDag, K: int, delta: int, mode: str, distinct: bool = False) -> SolveResult:
    if mode == "maxmin":
        return solve_maxmin(g, K, delta)
    if mode == "maxsum":
        return solve_maxsum(g, K, delta, distinct=distinct)
    raise InvalidInputError(f"unknown mode {mode!r}")


def upper_bound(g: SigmaDag, K: int, mode: str) -> int | float:
    g.require_valid()
    if mode == "maxmin":
        return math.inf if K < 2 else g.r
    return g.r * math.comb(K, 2)


def optimize(g: SigmaDag, K: int, mode: str, distinct: bool = False) -> tuple[int | float, SolveResult]:
    """Largest delta with a YES answer, by binary search over [0, bound].

    Max-min with K = 1 has infinite diversity and is returned without search.
    Returns the optimum and the result of the solver call that attained it;
    ``(-1, NO result)`` when even delta = 0 fails (only possible with ``distinct``).
    """
    bound = upper_bound(g, K, mode)
    if bound == math.inf:
        res = solve(g, K, 0, mode)
        return math.inf, res
    lo_res = solve(g, K, 0, mode, distinct)
    calls = 1
    if not lo_res:
        lo_res.stats["calls"] = calls
        return -1, lo_res
    lo, hi = 0, bound
    while lo < hi:
        mid = (lo + hi + 1) // 2
        res = solve(g, K, mid, mode, distinct)
        calls += 1
        if res:
            lo, lo_res = mid, res
        else:
            hi = mid - 1
    lo_res.stats["calls"] = calls
    return lo, lo_res
