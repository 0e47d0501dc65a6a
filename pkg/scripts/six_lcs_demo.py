"""Six LCSs of ABABCDDEE / ABCBAEEDD and their most diverse subsets."""
import argparse
from dataclasses import dataclass

from divstr.coloring import fpt_solve
from divstr.dag import language
from divstr.exact import optimize
from divstr.lcs_dag import build_lcs_dag
from divstr.localsearch import ptas_maxsum
from divstr.strings import word_str


@dataclass
class DemoConfig:
    s1: str = "ABABCDDEE"
    s2: str = "ABCBAEEDD"
    max_k: int = 6
    eps: float = 0.5
    seed: int = 0


def run(cfg: DemoConfig):
    g = build_lcs_dag([cfg.s1, cfg.s2])
    words = sorted(word_str(w) for w in language(g))
    print(f"LCS length {g.r}, {len(words)} strings, DAG with {g.n_vertices} vertices / {g.size} edges")
    print("  " + " ".join(words))
    print(f"{'K':>2} {'max-min':>8} {'max-sum':>8} {'ptas':>6} {'fpt(max-min)':>13}")
    for K in range(2, min(cfg.max_k, len(words)) + 1):
        mm, _ = optimize(g, K, "maxmin")
        ms, _ = optimize(g, K, "maxsum")
        _, approx = ptas_maxsum(g, K, cfg.eps, cfg.seed)
        fpt = fpt_solve(g, K, mm, "maxmin", seed=cfg.seed)
        print(f"{K:>2} {mm:>8} {ms:>8} {approx:>6} {'YES' if fpt else 'NO':>13}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--s1", default=DemoConfig.s1)
    ap.add_argument("--s2", default=DemoConfig.s2)
    ap.add_argument("--max-k", type=int, default=DemoConfig.max_k)
    ap.add_argument("--eps", type=float, default=DemoConfig.eps)
    ap.add_argument("--seed", type=int, default=DemoConfig.seed)
    args = ap.parse_args()
    run(DemoConfig(args.s1, args.s2, args.max_k, args.eps, args.seed))


if __name__ == "__main__":
    main()
