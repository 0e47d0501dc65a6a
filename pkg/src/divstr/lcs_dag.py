"""Sigma-DAG for the set of all longest common subsequences of m strings.

The m-dimensional grid of prefix-index tuples is pruned to the vertices and
edges lying on some optimal path (forward table + backward table), then the
epsilon moves are removed by forward closure and right-equivalent vertices
are merged.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Sequence

from .dag import SigmaDag, compact, merge_equivalent
from .strings import Alphabet, InvalidInputError, Word, as_word


class NoLcsError(InvalidInputError):
    """The only common subsequence is the empty string."""


EPS = None


def _check(S):
    if len(S) == 0:
        raise InvalidInputError("need at least one input string")
    return [as_word(x) for x in S]


def _tables(S: list[Word]):
    """Forward lcs of prefixes and backward lcs of suffixes for every index tuple."""
    dims = [len(x) + 1 for x in S]
    m = len(S)
    fwd: dict[tuple[int, ...], int] = {}
    for idx in itertools.product(*(range(d) for d in dims)):
        if 0 in idx:
            fwd[idx] = 0
            continue
        c = S[0][idx[0] - 1]
        if all(S[k][idx[k] - 1] == c for k in range(1, m)):
            fwd[idx] = fwd[tuple(i - 1 for i in idx)] + 1
        else:
            fwd[idx] = max(fwd[idx[:k] + (idx[k] - 1,) + idx[k + 1:]] for k in range(m))
    bwd: dict[tuple[int, ...], int] = {}
    for idx in itertools.product(*(range(d - 1, -1, -1) for d in dims)):
        if any(idx[k] == dims[k] - 1 for k in range(m)):
            bwd[idx] = 0
            continue
        c = S[0][idx[0]]
        if all(S[k][idx[k]] == c for k in range(1, m)):
            bwd[idx] = bwd[tuple(i + 1 for i in idx)] + 1
        else:
            bwd[idx] = max(bwd[idx[:k] + (idx[k] + 1,) + idx[k + 1:]] for k in range(m))
    return fwd, bwd


def lcs_length(S: Sequence[str | Sequence[str]]) -> int:
    S = _check(S)
    fwd, _ = _tables(S)
    return fwd[tuple(len(x) for x in S)]


def grid_dag(S: Sequence[str | Sequence[str]]):
    """Optimal-edge sub-DAG of the grid graph.

    Returns ``(vertices, edges, source, sink, lcs)`` where vertices are index
    tuples and each edge is ``(u, label_or_None, v)``; ``None`` marks epsilon.
    """
    S = _check(S)
    fwd, bwd = _tables(S)
    m = len(S)
    source = (0,) * m
    sink = tuple(len(x) for x in S)
    best = fwd[sink]
    keep = {v for v in fwd if fwd[v] + bwd[v] == best}
    edges = []
    for u in sorted(keep):
        if all(u[k] < len(S[k]) for k in range(m)):
            c = S[0][u[0]]
            v = tuple(i + 1 for i in u)
            if all(S[k][u[k]] == c for k in range(1, m)) and fwd[u] + 1 + bwd[v] == best:
                edges.append((u, c, v))
        for k in range(m):
            if u[k] < len(S[k]):
                v = u[:k] + (u[k] + 1,) + u[k + 1:]
                if v in keep and fwd[u] == fwd[v]:
                    edges.append((u, EPS, v))
    return sorted(keep), edges, source, sink, best


def epsilon_removal(alphabet: Alphabet, vertices, edges, source, sink) -> SigmaDag:
    """Turn an epsilon-DAG whose paths spell an equi-length language into a validated Sigma-DAG.

    Forward closure: vertex ``x`` gets a labeled edge to ``w`` whenever some
    ``y`` in the epsilon-closure of ``x`` has a labeled edge ``y -> w``.
    Vertices whose closure contains ``sink`` become final and are merged
    into the sink.
    """
    eps_out = defaultdict(list)
    lab_out = defaultdict(list)
    for u, c, v in edges:
        (eps_out if c is EPS else lab_out)[u].append((c, v))

    closures: dict = {}

    def closure(x):
        if x not in closures:
            seen = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for _, z in eps_out[y]:
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
            closures[x] = seen
        return closures[x]

    new_edges = set()
    finals = set()
    todo = [source]
    kept = {source}
    while todo:
        x = todo.pop()
        cl = closure(x)
        if sink in cl:
            finals.add(x)
        for y in cl:
            for c, w in lab_out[y]:
                new_edges.add((x, c, w))
                if w not in kept:
                    kept.add(w)
                    todo.append(w)
    if source in finals:
        raise NoLcsError("language contains only the empty string")
    # keep only vertices that reach a final vertex
    rev = defaultdict(set)
    for x, _, w in new_edges:
        rev[w].add(x)
    live = set(finals)
    stack = list(finals)
    while stack:
        w = stack.pop()
        for x in rev[w]:
            if x not in live:
                live.add(x)
                stack.append(x)
    if source not in live:
        raise NoLcsError("no labeled source-sink path")

    order = sorted(live, key=lambda v: (v != source, v))
    ids = [_vid(v) for v in order if v not in finals] + ["t"]
    renum = {v: i for i, v in enumerate(x for x in order if x not in finals)}
    renum.update({v: len(ids) - 1 for v in finals})
    int_edges = sorted({(renum[x], c, renum[w]) for x, c, w in new_edges if x in live and w in live})
    if any(x == len(ids) - 1 for x, _, _ in int_edges):
        raise InvalidInputError("epsilon-DAG language is not equi-length")
    rep, merged = merge_equivalent(alphabet, len(ids), int_edges, renum[source], len(ids) - 1)
    return compact(alphabet, ids, merged, rep[renum[source]], len(ids) - 1)


def _vid(v) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(map(str, v)) + ")"
    return str(v)


def build_lcs_dag(S: Sequence[str | Sequence[str]], alphabet: Alphabet | None = None) -> SigmaDag:
    """Validated Sigma-DAG whose language is exactly LCS(S)."""
    S = _check(S)
    if alphabet is None:
        alphabet = Alphabet(tuple(sorted({tok for x in S for tok in x})) or ("_",))
    vertices, edges, source, sink, best = grid_dag(S)
    if best == 0:
        raise NoLcsError("longest common subsequence is empty")
    g = epsilon_removal(alphabet, vertices, edges, source, sink)
    assert g.r == best
    return g
