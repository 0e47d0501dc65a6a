"""Wall time of the exact max-min solver as the DAG grows at fixed K, r and delta."""
import argparse
import random
import time
from dataclasses import dataclass

from divstr.dag import dag_from_strings
from divstr.exact import solve_maxmin
from divstr.strings import Alphabet, StringSet


@dataclass
class SmokeConfig:
    K: int = 2
    r: int = 6
    delta: int = 4
    widths: tuple = (2, 4, 8, 16, 32)
    repeats: int = 3
    seed: int = 0


def random_dag(width, r, rng):
    syms = tuple(f"c{i}" for i in range(width))
    words = {tuple(rng.choice(syms) for _ in range(r)) for _ in range(4 * width)}
    return dag_from_strings(StringSet(Alphabet(syms), tuple(sorted(words))))


def run(cfg: SmokeConfig):
    rng = random.Random(cfg.seed)
    prev = None
    print(f"K={cfg.K} r={cfg.r} delta={cfg.delta}")
    print(f"{'size':>6} {'states':>8} {'ms':>9} {'time ratio':>10} {'size ratio':>10}")
    for width in cfg.widths:
        g = random_dag(width, cfg.r, rng)
        best = None
        for _ in range(cfg.repeats):
            t0 = time.perf_counter()
            res = solve_maxmin(g, cfg.K, cfg.delta)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        tr = f"{best / prev[1]:.2f}" if prev else "-"
        sr = f"{g.size / prev[0]:.2f}" if prev else "-"
        print(f"{g.size:>6} {res.stats['states']:>8} {best * 1000:>9.2f} {tr:>10} {sr:>10}")
        prev = (g.size, best)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=SmokeConfig.K)
    ap.add_argument("--r", type=int, default=SmokeConfig.r)
    ap.add_argument("--delta", type=int, default=SmokeConfig.delta)
    ap.add_argument("--seed", type=int, default=SmokeConfig.seed)
    args = ap.parse_args()
    run(SmokeConfig(K=args.k, r=args.r, delta=args.delta, seed=args.seed))


if __name__ == "__main__":
    main()
