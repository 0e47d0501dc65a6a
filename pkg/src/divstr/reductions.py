"""Hardness constructions as instance generators.

Each reduction comes with an iff-claim that the test suite checks against
brute-force oracles on small instances.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .strings import Alphabet, InvalidInputError, StringSet, Word


@dataclass(frozen=True)
class ThreeDMInstance:
    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        triples = tuple(tuple(t) for t in self.triples)
        object.__setattr__(self, "triples", triples)
        if self.n < 1:
            raise InvalidInputError("3DM needs n >= 1")
        if len(set(triples)) != len(triples):
            raise InvalidInputError("3DM triples must be distinct")
        for t in triples:
            if len(t) != 3 or not all(1 <= x <= self.n for x in t):
                raise InvalidInputError(f"triple {t} is not in [{self.n}]^3")


@dataclass(frozen=True)
class UGraph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInputError("self-loops are not allowed")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidInputError(f"edge ({u},{v}) outside [1,{self.n}]")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))


def reduce_3dm(inst: ThreeDMInstance):
    """Triples become 3-strings over position-tagged tokens ``a:v``, ``b:v``, ``c:v``.

    Returns ``(L, K, delta_min, delta_sum)`` with K = n, delta_min = 3 and
    delta_sum = 3 * C(n, 2).
    """
    if not inst.triples:
        raise InvalidInputError("3DM family must be non-empty")
    n = inst.n
    alphabet = Alphabet(tuple(f"{p}:{v}" for p in "abc" for v in range(1, n + 1)))
    members = tuple(tuple(f"{p}:{v}" for p, v in zip("abc", t)) for t in inst.triples)
    return StringSet(alphabet, members), n, 3, 3 * math.comb(n, 2)


def clique_positions(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def reduce_clique(g: UGraph, K: int):
    """One string per vertex, one position per vertex pair.

    ``S_i(e) = 0`` if i is an endpoint of the non-edge e, else ``i``. Returns
    ``(L, K, delta)`` with delta = r = C(n, 2). Identical strings (only
    possible for n = 2 without the edge) are kept once.
    """
    n = g.n
    if n < 2 or not 1 <= K <= n:
        raise InvalidInputError("clique reduction needs n >= 2 and 1 <= K <= n")
    positions = clique_positions(n)
    alphabet = Alphabet(tuple(str(i) for i in range(n + 1)))
    members: list[Word] = []
    for i in range(1, n + 1):
        w = tuple("0" if i in e and e not in g.edges else str(i) for e in positions)
        if w not in members:
            members.append(w)
    return StringSet(alphabet, tuple(members)), K, len(positions)


def segment_lengths(s: int, i: int) -> tuple[int, int, int, int]:
    """Lengths of (A_i, Abar_i, Bbar_i, B_i) for block i of s (1-based)."""
    if not 1 <= i <= s:
        raise InvalidInputError(f"segment index {i} outside [1, {s}]")
    return s - i + 1, i - 1, s - i, i


@dataclass(frozen=True)
class LcsEncoding:
    s1: Word
    s2: Word
    alphabet: Alphabet
    s: int
    padded: tuple[Word, ...]
    K: int
    delta: int
    mode: str
    delta_shifted: int
    stretch: int = 1

    @property
    def strings(self) -> tuple[Word, Word]:
        return self.s1, self.s2

    @property
    def frame(self) -> int:
        """Length of each padding block P_i and Q_i."""
        return self.s * self.stretch


def _xi(kind: str, i: int, j: int) -> str:
    return f"{kind}:{i}:{j}"


def shifted_delta(delta: int, frame: int, K: int, mode: str) -> int:
    """Threshold on the padded strings; every pairwise distance grows by 2 * frame."""
    if mode == "maxmin":
        return delta + 2 * frame
    if mode == "maxsum":
        return delta + 2 * frame * math.comb(K, 2)
    raise InvalidInputError(f"unknown mode {mode!r}")


def encode_as_lcs(L: StringSet, K: int, delta: int, mode: str, stretch: int | str = 1) -> LcsEncoding:
    """Two strings S1, S2 meant to have LCS set ``{P_i X_i Q_i}`` with fresh padding blocks.

    With ``stretch=1`` the padding blocks have length s and the segment
    lengths step by one per index. That is too shallow: a single Sigma
    symbol matched across two different blocks can replace one padding
    symbol, so extra (or longer) common subsequences appear on many inputs.
    ``stretch=m`` scales every segment by m (frames of length s*m);
    ``stretch="auto"`` uses m = r + 1, which outweighs any cross match.
    Every pairwise distance grows by exactly 2 * frame.
    """
    s = len(L)
    if s < 2:
        raise InvalidInputError("LCS encoding needs at least two strings")
    m = L.r + 1 if stretch == "auto" else int(stretch)
    if m < 1:
        raise InvalidInputError("stretch must be a positive integer or 'auto'")
    f = s * m
    xi = [_xi(kind, i, j) for kind in "ab" for i in range(1, s + 1) for j in range(1, f + 1)]
    clash = set(xi) & set(L.alphabet.symbols)
    if clash:
        raise InvalidInputError(f"alphabet tokens collide with padding symbols: {sorted(clash)[:3]}")
    gamma = Alphabet(L.alphabet.symbols + tuple(xi))
    A, W, B, T = [], [], [], []
    for i, x in enumerate(L.members, start=1):
        P = tuple(_xi("a", i, j) for j in range(1, f + 1))
        Q = tuple(_xi("b", i, j) for j in range(1, f + 1))
        la, _, lbb, _ = segment_lengths(s, i)
        la, lbb = la * m, lbb * m
        A.append(P[:la])
        W.append(P[la:] + tuple(x) + Q[:lbb])
        B.append(Q[lbb:])
        T.append(P + tuple(x) + Q)
    s1 = tuple(tok for seg in A + W + B for tok in seg)
    s2 = tuple(tok for i in range(s - 1, -1, -1) for tok in A[i] + W[i] + B[i])
    return LcsEncoding(s1, s2, gamma, s, tuple(T), K, delta, mode, shifted_delta(delta, f, K, mode), m)
