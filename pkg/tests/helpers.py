"""Shared fixtures data and hypothesis strategies."""
import random

from hypothesis import strategies as st

from divstr.strings import Alphabet, StringSet

PAIR = ("ABABCDDEE", "ABCBAEEDD")
PAIR_LCS = ["ABADD", "ABAEE", "ABBDD", "ABBEE", "ABCDD", "ABCEE"]
SYMBOLS = "ABCD"


@st.composite
def string_sets(draw, max_sigma=3, max_r=4, max_size=8, min_size=1):
    sigma = draw(st.integers(1, max_sigma))
    r = draw(st.integers(1, max_r))
    syms = SYMBOLS[:sigma]
    cap = min(max_size, sigma ** r)
    words = draw(st.sets(st.text(alphabet=syms, min_size=r, max_size=r),
                         min_size=min(min_size, cap), max_size=cap))
    return StringSet.of(sorted(words), Alphabet.of(syms))


def random_string_set(rng: random.Random, max_sigma=4, max_r=6, max_size=12, min_size=1):
    sigma = rng.randint(1, max_sigma)
    r = rng.randint(1, max_r)
    while sigma ** r < min_size:
        sigma += 1
    syms = SYMBOLS[:sigma]
    target = rng.randint(min_size, max(min_size, min(max_size, sigma ** r)))
    words = set()
    for _ in range(20 * target):
        if len(words) >= target:
            break
        words.add("".join(rng.choice(syms) for _ in range(r)))
    while len(words) < min_size:
        words.add("".join(rng.choice(syms) for _ in range(r)))
    return StringSet.of(sorted(words), Alphabet.of(syms))
