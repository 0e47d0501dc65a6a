"""Randomized color-coding search, parameterized by K and r.

The alphabet is colored with k = rK colors; the recolored DAG is reduced to
a layered trie over colors (with a correspondence back to original
vertices), the exact DP runs on the color alphabet, and any colored witness
is pulled back to genuine strings of L(G) and re-verified.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import exact
from .dag import SigmaDag, merge_equivalent, compact
from .exact import SolveResult
from .strings import Alphabet, InvalidInputError, Word, diversity

DEFAULT_MAX_REPS = 2000


@dataclass(frozen=True)
class Coloring:
    colors: dict[str, int]
    k: int
    seed: int | None = None

    def __call__(self, tok: str) -> int:
        return self.colors[tok]

    @property
    def injective(self) -> bool:
        return len(set(self.colors.values())) == len(self.colors)


def random_coloring(alphabet: Alphabet, k: int, seed: int | str) -> Coloring:
    if k < 1:
        raise InvalidInputError("need at least one color")
    rng = random.Random(f"coloring/{k}/{seed}")
    return Coloring({tok: rng.randrange(k) for tok in alphabet.symbols}, k, seed)


@dataclass
class ColoredTrie:
    dag: SigmaDag
    phi: dict[int, set[int]]

    @property
    def size(self) -> int:
        return self.dag.size


def color_alphabet(k: int) -> Alphabet:
    return Alphabet(tuple(str(i) for i in range(k)))


def build_colored_trie(g: SigmaDag, coloring: Coloring) -> ColoredTrie:
    """Layered trie of c(L(G)) built breadth-first, leaves merged into one sink.

    ``phi`` maps each trie vertex to the G-vertices reachable from the
    source along some path with that color prefix. Right-equivalent trie
    vertices are merged afterwards (the leaf merge is the depth-r case);
    ``phi`` of a merged vertex is the union.
    """
    g.require_valid()
    syms = g.alphabet.symbols
    col = [coloring(tok) for tok in syms]
    goto: dict[tuple[int, int], int] = {}
    phi: dict[int, set[int]] = {0: {g.source}}
    frontier = [0]
    n_nodes = 1
    for _ in range(g.r):
        nxt = []
        visited = set()
        for x in frontier:
            for v in sorted(phi[x]):
                if (x, v) in visited:
                    continue
                visited.add((x, v))
                for lab, w in g.out[v]:
                    c = col[lab]
                    y = goto.get((x, c))
                    if y is None:
                        y = goto[(x, c)] = n_nodes
                        n_nodes += 1
                        phi[y] = set()
                        nxt.append(y)
                    phi[y].add(w)
        frontier = nxt
    sink = n_nodes
    leaves = set(frontier)
    edges = [(x, str(c), sink if y in leaves else y) for (x, c), y in goto.items()]
    ids = ["root"] + [f"u{i}" for i in range(1, n_nodes)] + ["t"]
    alpha = color_alphabet(coloring.k)
    rep, merged = merge_equivalent(alpha, n_nodes + 1, edges, 0, sink)
    h = compact(alpha, ids, merged, 0, sink, r=g.r)
    pos = {name: i for i, name in enumerate(h.ids)}
    new_phi: dict[int, set[int]] = {}
    for x, verts in phi.items():
        target = sink if x in leaves else rep[x]
        new_phi.setdefault(pos[ids[target]], set()).update(verts)
    return ColoredTrie(h, new_phi)


def pull_back(g: SigmaDag, coloring: Coloring, colored: Word) -> Word:
    """Lexicographically least string of L(G) whose coloring is ``colored``."""
    syms = g.alphabet.symbols
    col = [coloring(tok) for tok in syms]
    want = [int(c) for c in colored]
    fwd = [{g.source}]
    for d in range(g.r):
        fwd.append({w for v in fwd[d] for lab, w in g.out[v] if col[lab] == want[d]})
    # backward pass keeps only vertices that finish at the sink
    alive = [set() for _ in range(g.r + 1)]
    alive[g.r] = fwd[g.r] & {g.sink}
    for d in range(g.r - 1, -1, -1):
        alive[d] = {v for v in fwd[d] if any(col[lab] == want[d] and w in alive[d + 1] for lab, w in g.out[v])}
    if g.source not in alive[0]:
        raise InvalidInputError("colored string has no preimage in L(G)")
    cur = {g.source}
    out = []
    for d in range(g.r):
        best = min(lab for v in cur for lab, w in g.out[v] if col[lab] == want[d] and w in alive[d + 1])
        out.append(syms[best])
        cur = {w for v in cur for lab, w in g.out[v] if lab == best and w in alive[d + 1]}
    return tuple(out)


def success_probability(r: int, K: int) -> float:
    k = r * K
    return math.exp(math.lgamma(k + 1) - k * math.log(k)) if k > 0 else 1.0


def default_repetitions(r: int, K: int, cap: int = DEFAULT_MAX_REPS) -> int:
    p = success_probability(r, K)
    return max(1, min(cap, math.ceil(math.log(100) / p)))


def _attempt(g: SigmaDag, K: int, delta: int, mode: str, seed, rep: int):
    coloring = random_coloring(g.alphabet, g.r * K, f"{seed}/{rep}")
    trie = build_colored_trie(g, coloring)
    res = exact.solve(trie.dag, K, delta, mode)
    if not res:
        return None, trie.size, res.stats.get("states", 0)
    witness = [pull_back(g, coloring, w) for w in res.witness]
    return witness, trie.size, res.stats.get("states", 0)


def fpt_solve(g: SigmaDag, K: int, delta: int, mode: str = "maxmin", seed: int = 0,
              repetitions: int | None = None, max_repetitions: int = DEFAULT_MAX_REPS,
              workers: int = 1) -> SolveResult:
    """Repeated color-coding search. YES answers are always verified; NO may be a false negative."""
    g.require_valid()
    if mode not in ("maxmin", "maxsum"):
        raise InvalidInputError(f"unknown mode {mode!r}")
    if K < 1 or delta < 0:
        raise InvalidInputError("need K >= 1 and delta >= 0")
    r = g.r
    bound = exact.upper_bound(g, K, mode)
    if delta > bound:
        return SolveResult(False, stats={"states": 0, "repetitions": 0, "reason": "delta exceeds bound"})
    reps = repetitions if repetitions is not None else default_repetitions(r, K, max_repetitions)
    stats = {"states": 0, "repetitions": 0, "max_trie_size": 0, "bound_k_pow_r": (r * K) ** r}

    def record(witness, size, states):
        stats["repetitions"] += 1
        stats["states"] += states
        stats["max_trie_size"] = max(stats["max_trie_size"], size)
        if witness is None:
            return None
        achieved = diversity(witness, mode)
        if achieved < delta:
            raise AssertionError(f"pulled-back witness has diversity {achieved} < {delta}")
        return SolveResult(True, witness, achieved, stats)

    if workers <= 1:
        for rep in range(reps):
            res = record(*_attempt(g, K, delta, mode, seed, rep))
            if res:
                return res
        return SolveResult(False, stats=stats)

    with ProcessPoolExecutor(max_workers=workers) as pool:
        for lo in range(0, reps, workers):
            batch = range(lo, min(reps, lo + workers))
            outcomes = list(pool.map(_attempt, *zip(*[(g, K, delta, mode, seed, rep) for rep in batch])))
            for outcome in outcomes:
                res = record(*outcome)
                if res:
                    return res
    return SolveResult(False, stats=stats)
