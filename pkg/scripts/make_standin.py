"""Write a synthetic edge list in SNAP's text format.

Useful when the real network files are not at hand.  The defaults match the
raw size of p2p-Gnutella04; ``--preset epinions`` matches soc-Epinions1.

    python3 scripts/make_standin.py data/standin-gnutella.txt.gz
    singly run data/standin-gnutella.txt.gz
"""

import argparse
import gzip
from dataclasses import dataclass

from singly.oracle import snap_like_pairs

PRESETS = {"gnutella": (10876, 39994), "epinions": (75879, 508837)}


@dataclass
class StandinConfig:
    n: int
    m: int
    seed: int = 0


def write(path: str, cfg: StandinConfig) -> None:
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "wt") as fh:
        fh.write(f"# synthetic stand-in: n={cfg.n} m={cfg.m} seed={cfg.seed}\n")
        fh.write("# FromNodeId\tToNodeId\n")
        for a, b in snap_like_pairs(cfg.n, cfg.m, cfg.seed):
            fh.write(f"{a}\t{b}\n")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("output")
    p.add_argument("--preset", choices=sorted(PRESETS), default="gnutella")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    n, m = PRESETS[args.preset]
    write(args.output, StandinConfig(args.n or n, args.m or m, args.seed))


if __name__ == "__main__":
    main()
