"""How far each heuristic lands from the exact optimum on small random DAGs.

    python3 scripts/oracle_gap.py --instances 500 --max-m 14
"""

import argparse
import statistics
from collections import defaultdict
from dataclasses import dataclass

from singly.algorithms import HEURISTICS
from singly.oracle import GenSpec, SplitMix64, brute_force_min_removal, generate


@dataclass
class GapConfig:
    instances: int = 200
    min_n: int = 4
    max_n: int = 10
    max_m: int = 14
    seed: int = 3


def run(cfg: GapConfig) -> None:
    rng = SplitMix64(cfg.seed)
    ratios = defaultdict(list)
    optimal_hits = defaultdict(int)
    already = 0
    for _ in range(cfg.instances):
        n = cfg.min_n + rng.below(cfg.max_n - cfg.min_n + 1)
        m = min(cfg.max_m, n * (n - 1) // 2, 3 + rng.below(cfg.max_m - 2))
        g = generate(GenSpec(n, m, seed=rng.next()))
        opt = brute_force_min_removal(g).size
        if opt == 0:
            already += 1
            continue
        for name, fn in HEURISTICS.items():
            size = fn(g).size
            if size < opt:
                raise AssertionError(f"{name} beat the optimum on {g.pairs()}")
            ratios[name].append(size / opt)
            optimal_hits[name] += size == opt
    scored = cfg.instances - already
    print(f"{cfg.instances} instances, m <= {cfg.max_m}; {already} already singly connected")
    print(f"{'algorithm':<10} {'mean':>6} {'max':>6} {'optimal':>9}")
    for name, r in ratios.items():
        print(f"{name:<10} {statistics.mean(r):6.3f} {max(r):6.2f} {optimal_hits[name]:4d}/{scored}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--instances", type=int, default=GapConfig.instances)
    p.add_argument("--max-m", type=int, default=GapConfig.max_m)
    p.add_argument("--seed", type=int, default=GapConfig.seed)
    args = p.parse_args()
    run(GapConfig(instances=args.instances, max_m=args.max_m, seed=args.seed))


if __name__ == "__main__":
    main()
