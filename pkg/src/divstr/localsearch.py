"""Max-Sum approximation for unbounded K: farthest-string DP, local search, PTAS dispatch."""
from __future__ import annotations

import math
import random
from typing import Sequence

from . import exact
from .dag import SigmaDag, enumerate_language
from .strings import InvalidInputError, Word, as_word, div_sum, hamming


class InfeasibleError(InvalidInputError):
    """Fewer than K strings are available."""


def farthest_string(g: SigmaDag, Xprime: Sequence[Sequence[str]], cap: int,
                    forbidden: Sequence[Sequence[str]] = ()) -> tuple[Word | None, int]:
    """String Y in L(g) maximizing sum of Hamming distances to ``Xprime``, capped at ``cap``.

    States are (vertex, capped partial sum, mask of forbidden strings whose
    prefix still equals the path). Sink states with a non-zero mask are
    rejected, so Y avoids ``forbidden``. Returns ``(None, -1)`` if every
    string of L(g) is forbidden.
    """
    g.require_valid()
    if cap < 0:
        raise InvalidInputError("cap must be non-negative")
    refs = [g.alphabet.encode(as_word(x)) for x in Xprime]
    bans = [g.alphabet.encode(as_word(x)) for x in forbidden]
    for w in refs + bans:
        if len(w) != g.r:
            raise InvalidInputError(f"reference strings must have length {g.r}")
    sigma = g.alphabet.size
    # cost[d][c]: contribution of label c at depth d+1
    cost = [[sum(c != x[d] for x in refs) for c in range(sigma)] for d in range(g.r)]

    start = (0, (1 << len(bans)) - 1)
    layer = {g.source: {start: None}}
    tables = [layer]
    for d in range(g.r):
        nxt: dict[int, dict] = {}
        row = cost[d]
        for v, pats in layer.items():
            for c, w in g.out[v]:
                bucket = nxt.setdefault(w, {})
                keep = 0
                for b, ban in enumerate(bans):
                    if ban[d] == c:
                        keep |= 1 << b
                for (u, mask) in pats:
                    key = (min(cap, u + row[c]), mask & keep)
                    if key not in bucket:
                        bucket[key] = (v, (u, mask), c)
        layer = nxt
        tables.append(layer)
    final = [key for key in layer.get(g.sink, {}) if key[1] == 0]
    if not final:
        return None, -1
    key = max(final, key=lambda k: k[0])
    value = key[0]
    labels = []
    v = g.sink
    for d in range(g.r, 0, -1):
        v, key_prev, c = tables[d][v][key]
        labels.append(c)
        key = key_prev
    syms = g.alphabet.symbols
    y = tuple(syms[c] for c in reversed(labels))
    return y, value


def iteration_budget(K: int) -> int:
    """Outer iterations of the local search: ceil(K(K-1)/(K+1) * ln((K+2)(K-1)^2/4))."""
    if K < 2:
        return 0
    return max(0, math.ceil(K * (K - 1) / (K + 1) * math.log((K + 2) * (K - 1) ** 2 / 4)))


def sample_paths(g: SigmaDag, K: int, seed: int, max_tries: int | None = None) -> list[Word]:
    """K distinct strings of L(g) from seeded random walks with rejection of duplicates.

    Falls back to the lexicographically first unused strings if rejection
    sampling stalls (tiny languages with skewed walk probabilities).
    """
    rng = random.Random(seed)
    syms = g.alphabet.symbols
    picked: list[Word] = []
    seen = set()
    tries = max_tries if max_tries is not None else 50 * K + 100
    for _ in range(tries):
        if len(picked) == K:
            break
        v, w = g.source, []
        while v != g.sink:
            c, v = rng.choice(g.out[v])
            w.append(syms[c])
        w = tuple(w)
        if w not in seen:
            seen.add(w)
            picked.append(w)
    if len(picked) < K:
        words, _ = enumerate_language(g, K + len(picked))
        for w in words:
            if len(picked) == K:
                break
            if w not in seen:
                seen.add(w)
                picked.append(w)
    return picked


def _require_feasible(g: SigmaDag, K: int):
    g.require_valid()
    if K < 1:
        raise InvalidInputError("K must be at least 1")
    words, _ = enumerate_language(g, K)
    if len(words) < K:
        raise InfeasibleError(f"language has only {len(words)} strings, fewer than K={K}")


def local_search_maxsum(g: SigmaDag, K: int, seed: int = 0, stats: dict | None = None) -> list[Word]:
    """Swap-based local search for K distinct strings with large distance sum.

    Each element X is offered the farthest string Y outside the current set
    (scored against the other K-1 members); the swap is taken only when it
    strictly increases the set's distance sum.
    """
    _require_feasible(g, K)
    current = sample_paths(g, K, seed)
    swaps = 0
    iters = iteration_budget(K)
    for _ in range(iters):
        for idx in range(K):
            x = current[idx]
            others = current[:idx] + current[idx + 1:]
            y, val = farthest_string(g, others, g.r * (K - 1), forbidden=current)
            if y is None:
                continue
            if val > sum(hamming(o, x) for o in others):
                current[idx] = y
                swaps += 1
    if stats is not None:
        stats.update(iterations=iters, swaps=swaps)
    return current


def ptas_maxsum(g: SigmaDag, K: int, eps: float, seed: int = 0,
                stats: dict | None = None) -> tuple[list[Word], int]:
    """(1 - eps)-approximate max-sum selection of K distinct strings.

    Small K (K < 2/eps) is solved exactly by binary search on the threshold
    with the distinct-tuple DP; otherwise the local search is used.
    """
    if not 0 < eps < 1:
        raise InvalidInputError("eps must lie in (0, 1)")
    _require_feasible(g, K)
    stats = stats if stats is not None else {}
    if K * eps < 2:
        stats["branch"] = "exact"
        value, res = exact.optimize(g, K, "maxsum", distinct=True)
        stats.update(res.stats)
        return res.witness, value
    stats["branch"] = "local"
    chosen = local_search_maxsum(g, K, seed, stats)
    return chosen, div_sum(chosen)
