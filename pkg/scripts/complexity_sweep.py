"""Timing sweeps: algo1 against source count, dfs_once against n.

    python3 scripts/complexity_sweep.py
    python3 scripts/complexity_sweep.py --backend pure --n 50000 --m 150000

Prints one line per point with the fitted model next to the measurement.
"""

import argparse
import gc
import os
import statistics
from dataclasses import dataclass, field

import numpy as np

from singly.algorithms import algo1_from_sources, dfs_once
from singly.oracle import Family, GenSpec, generate


@dataclass
class SweepConfig:
    n: int = 20000
    m: int = 60000
    layers: int = 40
    source_counts: list[int] = field(default_factory=lambda: [1, 2, 4, 8, 16, 32])
    dfs_once_sizes: list[int] = field(default_factory=lambda: [10**3, 10**4, 10**5, 3 * 10**5])
    repetitions: int = 5
    seed: int = 5


def median_time(fn, g, reps):
    fn(g)
    gc.collect()
    gc.disable()
    try:
        return statistics.median(fn(g).elapsed for _ in range(reps))
    finally:
        gc.enable()


def sweep_sources(cfg: SweepConfig) -> None:
    times = []
    for i in cfg.source_counts:
        g = generate(GenSpec(cfg.n, cfg.m, cfg.seed, Family.LAYERED, layers=cfg.layers, top=i))
        times.append(median_time(algo1_from_sources, g, cfg.repetitions))
    b, a = np.polyfit(cfg.source_counts, times, 1)
    print(f"algo1, layered n={cfg.n} m={cfg.m}: fit {a * 1e3:.2f}ms + {b * 1e3:.2f}ms * i")
    for i, t in zip(cfg.source_counts, times):
        model = a + b * i
        print(f"  i={i:<4d} {t * 1e3:9.2f}ms   model {model * 1e3:9.2f}ms   ratio {t / model:.2f}")


def sweep_dfs_once(cfg: SweepConfig) -> None:
    print("dfs_once, single-source m == n instances:")
    for n in cfg.dfs_once_sizes:
        g = generate(GenSpec(n, n, cfg.seed, Family.THEOREM1))
        t = median_time(dfs_once, g, cfg.repetitions)
        print(f"  n={n:<8d} {t * 1e3:9.2f}ms   {t / n * 1e9:7.0f} ns/vertex")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--backend", choices=["auto", "pure"], default="auto",
                   help="'pure' forces the pure-Python DFS instead of the compiled one")
    p.add_argument("--n", type=int, default=SweepConfig.n)
    p.add_argument("--m", type=int, default=SweepConfig.m)
    p.add_argument("--layers", type=int, default=SweepConfig.layers)
    p.add_argument("--repetitions", type=int, default=SweepConfig.repetitions)
    args = p.parse_args()
    if args.backend == "pure":
        os.environ["SINGLY_PURE_PYTHON"] = "1"
    cfg = SweepConfig(n=args.n, m=args.m, layers=args.layers, repetitions=args.repetitions)
    sweep_sources(cfg)
    sweep_dfs_once(cfg)


if __name__ == "__main__":
    main()
