"""Alphabets, fixed-length strings, Hamming distance and the two diversity measures.

Strings are plain tuples of alphabet tokens. Tokens may be longer than one
character (reduction alphabets use tokens like ``a:1:2``), so a string is
never assumed to be a Python ``str``. Single-character alphabets can still be
written compactly: ``as_word("ABADD")`` gives ``('A', 'B', 'A', 'D', 'D')``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Word = tuple[str, ...]

INF = math.inf


class InvalidInputError(ValueError):
    """Malformed strings, alphabets or files."""


def as_word(x: str | Iterable[str]) -> Word:
    """Coerce ``"ABADD"`` or an iterable of tokens to a token tuple."""
    if isinstance(x, str):
        return tuple(x)
    return tuple(x)


def word_str(w: Sequence[str]) -> str:
    if all(len(tok) == 1 for tok in w):
        return "".join(w)
    return " ".join(w)


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise InvalidInputError("alphabet must contain at least one token")
        for tok in symbols:
            if not tok or any(ch.isspace() for ch in tok) or not tok.isprintable():
                raise InvalidInputError(f"bad alphabet token {tok!r}")
        if len(set(symbols)) != len(symbols):
            raise InvalidInputError("alphabet tokens must be distinct")
        object.__setattr__(self, "index", {tok: i for i, tok in enumerate(symbols)})

    @classmethod
    def of(cls, symbols: str | Iterable[str]) -> "Alphabet":
        return cls(tuple(symbols))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, tok):
        return tok in self.index

    @property
    def single_char(self) -> bool:
        return all(len(tok) == 1 for tok in self.symbols)

    def encode(self, w: Sequence[str]) -> tuple[int, ...]:
        try:
            return tuple(self.index[tok] for tok in w)
        except KeyError as exc:
            raise InvalidInputError(f"token {exc.args[0]!r} not in alphabet") from None

    def sort_key(self, w: Sequence[str]) -> tuple[int, ...]:
        """Lexicographic order by token index."""
        return self.encode(w)


@dataclass(frozen=True)
class StringSet:
    """An ordered set of distinct, equal-length strings over one alphabet."""

    alphabet: Alphabet
    members: tuple[Word, ...]
    r: int = field(init=False)

    def __post_init__(self):
        members = tuple(as_word(m) for m in self.members)
        object.__setattr__(self, "members", members)
        if len(set(members)) != len(members):
            raise InvalidInputError("string set members must be pairwise distinct")
        lengths = {len(m) for m in members}
        if len(lengths) > 1:
            raise InvalidInputError(f"string set is not equi-length: lengths {sorted(lengths)}")
        for m in members:
            self.alphabet.encode(m)
        object.__setattr__(self, "r", lengths.pop() if lengths else 0)

    @classmethod
    def of(cls, members: Iterable[str | Iterable[str]], alphabet: Alphabet | None = None) -> "StringSet":
        words = [as_word(m) for m in members]
        if alphabet is None:
            seen: dict[str, None] = {}
            for w in words:
                seen.update(dict.fromkeys(w))
            alphabet = Alphabet(tuple(sorted(seen)))
        return cls(alphabet, tuple(words))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def total_length(self) -> int:
        return self.r * len(self.members)


def hamming(x: Sequence[str], y: Sequence[str]) -> int:
    if len(x) != len(y):
        raise InvalidInputError(f"hamming distance needs equal lengths, got {len(x)} and {len(y)}")
    return sum(a != b for a, b in zip(x, y))


def _check_equal_length(xs: Sequence[Sequence[str]]):
    if len({len(x) for x in xs}) > 1:
        raise InvalidInputError("diversity needs equal-length strings")


def div_sum(xs: Sequence[Sequence[str]]) -> int:
    _check_equal_length(xs)
    return sum(hamming(a, b) for a, b in combinations(xs, 2))


def div_min(xs: Sequence[Sequence[str]]) -> int | float:
    """Minimum pairwise distance; ``math.inf`` for fewer than two strings."""
    _check_equal_length(xs)
    return min((hamming(a, b) for a, b in combinations(xs, 2)), default=INF)


def diversity(xs: Sequence[Sequence[str]], mode: str) -> int | float:
    if mode == "maxmin":
        return div_min(xs)
    if mode == "maxsum":
        return div_sum(xs)
    raise InvalidInputError(f"unknown diversity mode {mode!r}")


def l1_embed(x: Sequence[str], alphabet: Alphabet) -> tuple[Fraction, ...]:
    """Half-scaled one-hot embedding; l1 distance between images equals Hamming distance.

    Coordinates are exact rationals, each 0 or 1/2.
    """
    half = Fraction(1, 2)
    out = []
    for i in alphabet.encode(x):
        block = [Fraction(0)] * alphabet.size
        block[i] = half
        out.extend(block)
    return tuple(out)


def l1_distance(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise InvalidInputError("l1 distance needs equal dimensions")
    return sum((abs(a - b) for a, b in zip(u, v)), Fraction(0))
