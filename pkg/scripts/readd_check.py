"""Does putting one removed edge back always break single-connectivity?

For algo1 the answer is no: an edge dropped by one source's run can be the
only route left for another source.  This counts how often that happens.

    python3 scripts/readd_check.py --instances 2000
"""

import argparse
from dataclasses import dataclass

from singly.algorithms import algo1_from_sources
from singly.graph import restrict
from singly.oracle import GenSpec, SplitMix64, generate
from singly.verify import check_by_counting


@dataclass
class ReaddConfig:
    instances: int = 2000
    max_n: int = 12
    seed: int = 11


def run(cfg: ReaddConfig) -> None:
    rng = SplitMix64(cfg.seed)
    trials = feasible = 0
    example = None
    for _ in range(cfg.instances):
        n = 3 + rng.below(cfg.max_n - 2)
        g = generate(GenSpec(n, rng.below(n * (n - 1) // 2 + 1), seed=rng.next()))
        res = algo1_from_sources(g)
        kept = set(res.graph.edge_ids)
        for e in res.removed:
            trials += 1
            if check_by_counting(restrict(g, kept | {e})).ok:
                feasible += 1
                if example is None or g.m < example[0].m:
                    example = (g, g.edge(e))
    print(f"{trials} single-edge re-additions, {feasible} left the graph singly connected")
    if example:
        g, e = example
        print(f"smallest example: n={g.n} edges={g.pairs()} re-added ({e.tail},{e.head})")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--instances", type=int, default=ReaddConfig.instances)
    p.add_argument("--seed", type=int, default=ReaddConfig.seed)
    args = p.parse_args()
    run(ReaddConfig(instances=args.instances, seed=args.seed))


if __name__ == "__main__":
    main()
