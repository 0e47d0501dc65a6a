"""Sigma-DAGs: layered edge-labeled DAGs whose source-to-sink paths spell equal-length strings."""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Sequence

from .strings import Alphabet, InvalidInputError, StringSet, Word


class DagValidationError(InvalidInputError):
    """Base class for structural problems found by :func:`validate`."""


class CycleError(DagValidationError):
    pass


class SourceSinkError(DagValidationError):
    pass


class OffPathVertexError(DagValidationError):
    pass


class InconsistentDepthError(DagValidationError):
    pass


class UnvalidatedDagError(InvalidInputError):
    pass


@dataclass(frozen=True)
class Edge:
    src: int
    label: str
    dst: int


class SigmaDag:
    """A Sigma-DAG over ``alphabet``.

    Vertices are indexed ``0..n-1`` in declaration order and keep their
    external string ids in ``ids``. Solvers require a validated DAG; after
    :func:`validate` succeeds ``depth``, ``layers`` and ``r`` are populated
    and the object should be treated as read-only.
    """

    def __init__(self, alphabet: Alphabet, ids: Sequence[str], edges: Sequence[tuple[int, str, int]],
                 source: int | None = None, sink: int | None = None, r: int | None = None):
        self.alphabet = alphabet
        self.ids = list(ids)
        self.edges = [Edge(u, lab, v) for u, lab, v in edges]
        self.source = source
        self.sink = sink
        self.declared_r = r
        self.depth: list[int] | None = None
        self.layers: list[list[int]] | None = None
        self.r: int | None = None
        self.out: list[list[tuple[int, int]]] = [[] for _ in self.ids]
        self.inc: list[list[tuple[int, int]]] = [[] for _ in self.ids]
        for e in self.edges:
            if not (0 <= e.src < len(self.ids) and 0 <= e.dst < len(self.ids)):
                raise InvalidInputError(f"edge {e} refers to an unknown vertex")
            lab = alphabet.encode((e.label,))[0]
            self.out[e.src].append((lab, e.dst))
            self.inc[e.dst].append((lab, e.src))
        for adj in self.out:
            adj.sort()

    @property
    def n_vertices(self) -> int:
        return len(self.ids)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def validated(self) -> bool:
        return self.depth is not None

    def require_valid(self):
        if self.depth is None:
            raise UnvalidatedDagError("Sigma-DAG must be validated before solving")

    def __repr__(self):
        return f"SigmaDag(|V|={self.n_vertices}, size={self.size}, r={self.r})"


def validate(g: SigmaDag) -> dict[str, int]:
    """Check the Sigma-DAG properties and return the depth of every vertex id.

    Raises a distinct :class:`DagValidationError` subclass for each violated
    property: source/sink uniqueness, acyclicity, every vertex on some
    source-to-sink path, and path-length consistency.
    """
    n = g.n_vertices
    if n == 0:
        raise SourceSinkError("empty vertex set")
    no_in = [v for v in range(n) if not g.inc[v]]
    no_out = [v for v in range(n) if not g.out[v]]
    src = g.source if g.source is not None else 0
    if no_in != [src]:
        raise SourceSinkError(
            f"expected unique source {g.ids[src]!r}; vertices without incoming edges: "
            f"{[g.ids[v] for v in no_in]}")
    if g.sink is not None and no_out != [g.sink]:
        raise SourceSinkError(
            f"expected unique sink {g.ids[g.sink]!r}; vertices without outgoing edges: "
            f"{[g.ids[v] for v in no_out]}")
    if len(no_out) != 1:
        raise SourceSinkError(f"expected a unique sink; vertices without outgoing edges: "
                              f"{[g.ids[v] for v in no_out]}")
    sink = no_out[0]
    if src == sink:
        raise SourceSinkError("source and sink coincide; a Sigma-DAG needs r >= 1")

    indeg = [len(g.inc[v]) for v in range(n)]
    queue = deque(v for v in range(n) if indeg[v] == 0)
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for _, w in g.out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) != n:
        stuck = [g.ids[v] for v in range(n) if indeg[v] > 0]
        raise CycleError(f"cycle through vertices {stuck[:10]}")

    reach = _closure(src, lambda v: (w for _, w in g.out[v]))
    coreach = _closure(sink, lambda v: (u for _, u in g.inc[v]))
    off = [g.ids[v] for v in range(n) if v not in reach or v not in coreach]
    if off:
        raise OffPathVertexError(f"vertices not on any source-sink path: {off[:10]}")

    depth = [-1] * n
    depth[src] = 0
    for v in order:
        for _, w in g.out[v]:
            if depth[w] == -1:
                depth[w] = depth[v] + 1
            elif depth[w] != depth[v] + 1:
                raise InconsistentDepthError(
                    f"vertex {g.ids[w]!r} is reached by paths of lengths {depth[w]} and {depth[v] + 1}")
    r = depth[sink]
    if g.declared_r is not None and g.declared_r != r:
        raise InconsistentDepthError(f"declared length {g.declared_r} but paths have length {r}")

    layers: list[list[int]] = [[] for _ in range(r + 1)]
    for v in range(n):
        layers[depth[v]].append(v)
    g.source, g.sink, g.depth, g.layers, g.r = src, sink, depth, layers, r
    return {g.ids[v]: depth[v] for v in range(n)}


def _closure(start, step):
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in step(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def dag_from_strings(L: StringSet) -> SigmaDag:
    """Trie over ``L`` with every leaf merged into one sink."""
    if len(L) == 0:
        raise InvalidInputError("cannot build a Sigma-DAG from an empty string set")
    if L.r < 1:
        raise InvalidInputError("strings must have length at least 1")
    ids = ["s"]
    edges = []
    children: dict[tuple[int, str], int] = {}
    sink_edges = set()
    for w in L.members:
        node = 0
        for tok in w[:-1]:
            nxt = children.get((node, tok))
            if nxt is None:
                nxt = len(ids)
                ids.append(f"v{nxt}")
                children[(node, tok)] = nxt
                edges.append((node, tok, nxt))
            node = nxt
        sink_edges.add((node, w[-1]))
    t = len(ids)
    ids.append("t")
    edges.extend((u, tok, t) for u, tok in sorted(sink_edges))
    g = SigmaDag(L.alphabet, ids, edges, source=0, sink=t)
    validate(g)
    return g


def enumerate_language(g: SigmaDag, limit: int) -> tuple[list[Word], bool]:
    """Distinct strings of L(g) in lexicographic token-index order, at most ``limit`` of them.

    Paths are explored over sets of vertices (on-the-fly subset construction),
    so strings spelled by several paths are produced once.
    """
    g.require_valid()
    if limit < 1:
        raise InvalidInputError("limit must be positive")
    syms = g.alphabet.symbols
    out: list[Word] = []
    prefix: list[str] = []

    def walk(states: frozenset[int]) -> bool:
        if g.sink in states:
            out.append(tuple(prefix))
            return len(out) > limit
        by_label: dict[int, set[int]] = defaultdict(set)
        for v in states:
            for lab, w in g.out[v]:
                by_label[lab].add(w)
        for lab in sorted(by_label):
            prefix.append(syms[lab])
            stop = walk(frozenset(by_label[lab]))
            prefix.pop()
            if stop:
                return True
        return False

    truncated = walk(frozenset([g.source]))
    if truncated:
        out = out[:limit]
    return out, truncated


def language(g: SigmaDag, limit: int = 10**6) -> set[Word]:
    words, truncated = enumerate_language(g, limit)
    if truncated:
        raise InvalidInputError(f"language has more than {limit} strings")
    return set(words)


def merge_equivalent(alphabet: Alphabet, n: int, edges: Sequence[tuple[int, str, int]],
                     source: int, sink: int) -> tuple[list[int], list[tuple[int, str, int]]]:
    """Merge vertices with identical outgoing edge sets, bottom-up.

    ``edges`` must describe a DAG in which every vertex reaches ``sink``.
    Returns the representative of each vertex and the deduplicated edge list
    on representatives. Language is preserved.
    """
    out = defaultdict(set)
    indeg = [0] * n
    for u, lab, v in edges:
        if (lab, v) not in out[u]:
            out[u].add((lab, v))
    rev = defaultdict(set)
    for u, succ in out.items():
        for _, v in succ:
            rev[v].add(u)
    for v in range(n):
        indeg[v] = len(out[v])
    # process in reverse topological order (all successors settled first)
    rep = list(range(n))
    sig_to_rep: dict[frozenset, int] = {}
    ready = deque(v for v in range(n) if indeg[v] == 0)
    while ready:
        v = ready.popleft()
        sig = frozenset((lab, rep[w]) for lab, w in out[v]) if v != sink else "SINK"
        if v == source:
            rep[v] = v
        else:
            rep[v] = sig_to_rep.setdefault(sig, v)
        for u in rev[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                ready.append(u)
    new_edges = sorted({(rep[u], lab, rep[v]) for u, lab, v in edges},
                       key=lambda e: (e[0], alphabet.index[e[1]], e[2]))
    return rep, new_edges


def compact(alphabet: Alphabet, ids: Sequence[str], edges: Sequence[tuple[int, str, int]],
            source: int, sink: int, r: int | None = None) -> SigmaDag:
    """Build a validated SigmaDag keeping only vertices that appear in ``edges``, renumbered."""
    used = sorted({source, sink} | {u for u, _, _ in edges} | {v for _, _, v in edges},
                  key=lambda v: (v != source, v == sink, v))
    pos = {v: i for i, v in enumerate(used)}
    g = SigmaDag(alphabet, [ids[v] for v in used],
                 [(pos[u], lab, pos[v]) for u, lab, v in edges],
                 source=pos[source], sink=pos[sink], r=r)
    validate(g)
    return g
