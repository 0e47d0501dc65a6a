"""Compare the textbook two-string LCS encoding with the stretched one on random families."""
import argparse
import random
from dataclasses import dataclass

from divstr.oracle import brute_lcs_set
from divstr.reductions import encode_as_lcs
from divstr.strings import Alphabet, StringSet


@dataclass
class CheckConfig:
    families: int = 100
    max_s: int = 4
    max_r: int = 3
    max_sigma: int = 3
    seed: int = 0


def random_family(rng, cfg):
    while True:
        sigma = rng.randint(1, cfg.max_sigma)
        r = rng.randint(1, cfg.max_r)
        syms = "ABC"[:sigma]
        pool = sorted({"".join(rng.choice(syms) for _ in range(r)) for _ in range(4 * cfg.max_s)})
        if len(pool) >= 2:
            s = rng.randint(2, min(cfg.max_s, len(pool)))
            return StringSet.of(rng.sample(pool, s), Alphabet.of(syms))


def run(cfg: CheckConfig):
    rng = random.Random(cfg.seed)
    fails = {1: 0, "auto": 0}
    example = None
    for _ in range(cfg.families):
        L = random_family(rng, cfg)
        for stretch in fails:
            enc = encode_as_lcs(L, 2, 0, "maxmin", stretch=stretch)
            found = brute_lcs_set(enc.s1, enc.s2)
            if found != set(enc.padded):
                fails[stretch] += 1
                if stretch == 1 and example is None:
                    example = (L, len(found), len(next(iter(found))), len(enc.padded[0]))
    print(f"{cfg.families} families: textbook layout wrong on {fails[1]}, stretched on {fails['auto']}")
    if example:
        L, n, got_len, want_len = example
        print(f"e.g. L={[''.join(w) for w in L.members]}: {n} LCSs of length {got_len}, expected {len(L)} of length {want_len}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--families", type=int, default=CheckConfig.families)
    ap.add_argument("--seed", type=int, default=CheckConfig.seed)
    args = ap.parse_args()
    run(CheckConfig(families=args.families, seed=args.seed))


if __name__ == "__main__":
    main()
