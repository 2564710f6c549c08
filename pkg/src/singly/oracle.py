"""Ground truth: exhaustive minimum removal sets and seeded instance generators.

Random draws come from SplitMix64 (Steele, Lea and Flood 2014) with
rejection-sampled bounded integers, implemented here so a seed yields the
same graph on every Python version and platform.  Changing the generator or
the way draws are consumed is a format break; bump ``GENERATOR_VERSION``.
"""

from __future__ import annotations

import bisect
import enum
import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

from .graph import DiGraph, build, require_acyclic
from .verify import _count_core

GENERATOR_VERSION = "splitmix64-v1"
_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in [0, k)."""
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = ((1 << 64) // k) * k
        while True:
            x = self.next()
            if x < limit:
                return x % k

    def permutation(self, n: int) -> list[int]:
        p = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            p[i], p[j] = p[j], p[i]
        return p

    def sample_indices(self, population: int, k: int) -> list[int]:
        """k distinct indices from range(population), in draw order.

        Partial Fisher-Yates over a virtual array, so memory is O(k).
        """
        if k > population:
            raise ValueError("sample larger than population")
        swapped: dict[int, int] = {}
        out = []
        for i in range(k):
            j = i + self.below(population - i)
            out.append(swapped.get(j, j))
            swapped[j] = swapped.get(i, i)
        return out


class Family(enum.Enum):
    GENERAL_DAG = "dag"
    THEOREM1 = "theorem1"
    LAYERED = "layered"


class InfeasibleSpec(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    seed: int = 0
    family: Family = Family.GENERAL_DAG
    layers: int = 2
    # LAYERED only: size of the first layer, i.e. the number of sources
    top: int | None = None

    def describe(self) -> str:
        parts = [f"family={self.family.value}", f"n={self.n}", f"m={self.m}", f"seed={self.seed}"]
        if self.family is Family.LAYERED:
            parts += [f"layers={self.layers}", f"top={self._top()}"]
        return " ".join(parts) + f" rng={GENERATOR_VERSION}"

    def _top(self) -> int:
        return self.top if self.top is not None else -(-self.n // self.layers)


def _pair(t: int) -> tuple[int, int]:
    # t-th pair (a, b) with a < b, enumerated by b then a
    b = (1 + math.isqrt(1 + 8 * t)) // 2
    while b * (b - 1) // 2 > t:
        b -= 1
    while (b + 1) * b // 2 <= t:
        b += 1
    return t - b * (b - 1) // 2, b


def generate(spec: GenSpec) -> DiGraph:
    if spec.n < 0 or spec.m < 0:
        raise InfeasibleSpec("n and m must be non-negative")
    rng = SplitMix64(spec.seed)
    if spec.family is Family.GENERAL_DAG:
        return _general(spec, rng)
    if spec.family is Family.THEOREM1:
        return _theorem1(spec, rng)
    return _layered(spec, rng)


def _general(spec: GenSpec, rng: SplitMix64) -> DiGraph:
    n, m = spec.n, spec.m
    total = n * (n - 1) // 2
    if m > total:
        raise InfeasibleSpec(f"m={m} exceeds n(n-1)/2={total}")
    vertex_at = rng.permutation(n)  # rank -> vertex
    pairs = [_pair(t) for t in rng.sample_indices(total, m)]
    edges = sorted((vertex_at[a], vertex_at[b]) for a, b in pairs)
    return build(n, edges)


def _theorem1(spec: GenSpec, rng: SplitMix64) -> DiGraph:
    n = spec.n
    if n < 3 or spec.m != n:
        raise InfeasibleSpec("theorem1 family needs n >= 3 and m == n")
    # vertex 0 has rank 0 and is the only source
    vertex_at = [0] + [v + 1 for v in rng.permutation(n - 1)]
    edges = set()
    for r in range(1, n):
        edges.add((rng.below(r), r))
    total = n * (n - 1) // 2
    while True:
        extra = _pair(rng.below(total))
        if extra not in edges:
            edges.add(extra)
            break
    return build(n, sorted((vertex_at[a], vertex_at[b]) for a, b in edges))


def _layered(spec: GenSpec, rng: SplitMix64) -> DiGraph:
    n, m, k = spec.n, spec.m, spec.layers
    if k < 1:
        raise InfeasibleSpec("need at least one layer")
    top = spec._top()
    if k == 1:
        sizes = [n]
    else:
        rest = n - top
        sizes = [top] + [rest // (k - 1) + (i < rest % (k - 1)) for i in range(k - 1)]
    if top != sizes[0] or min(sizes) <= 0:
        raise InfeasibleSpec(f"cannot split n={n} into {k} layers with a first layer of {top}")
    capacity = sum(a * b for a, b in zip(sizes, sizes[1:]))
    if not n - sizes[0] <= m <= capacity:
        raise InfeasibleSpec(f"m={m} outside [{n - sizes[0]}, {capacity}] for layers {sizes}")
    order = rng.permutation(n)
    layers, at = [], 0
    for s in sizes:
        layers.append(order[at:at + s])
        at += s
    edges: set[tuple[int, int]] = set()
    # every vertex below the first layer gets a parent, so sources == first layer
    for upper, lower in zip(layers, layers[1:]):
        for v in lower:
            edges.add((upper[rng.below(len(upper))], v))
    blocks = list(zip(layers, layers[1:]))
    offsets = list(itertools.accumulate((len(a) * len(b) for a, b in blocks), initial=0))
    need = m - len(edges)
    swapped: dict[int, int] = {}
    i = 0
    while need:
        j = i + rng.below(capacity - i)
        t = swapped.get(j, j)
        swapped[j] = swapped.get(i, i)
        i += 1
        bi = next(x for x in range(len(blocks)) if offsets[x + 1] > t)
        upper, lower = blocks[bi]
        q, r = divmod(t - offsets[bi], len(lower))
        e = (upper[q], lower[r])
        if e not in edges:
            edges.add(e)
            need -= 1
    return build(n, sorted(edges))


def snap_like_pairs(n: int, m: int, seed: int = 0, source_share: float = 1 / 3) -> list[tuple[int, int]]:
    """Raw ``(tail, head)`` lines shaped like a crawled social or P2P network.

    Tails and heads are drawn with Pareto(2) weights, and a ``source_share``
    of the vertices never appear as heads.  The output is deliberately dirty:
    it has cycles, repeated pairs and self-loops, so it exercises the whole
    ingest path the way a downloaded SNAP file would.
    """
    rng = SplitMix64(seed)

    def weight() -> float:
        u = (rng.next() >> 11) / float(1 << 53)
        return (1.0 - u) ** -0.5

    wt = [weight() for _ in range(n)]
    wh = [weight() for _ in range(n)]
    for v in rng.sample_indices(n, int(n * source_share)):
        wh[v] = 0.0
    ct = list(itertools.accumulate(wt))
    ch = list(itertools.accumulate(wh))

    def pick(cum: list[float]) -> int:
        x = (rng.next() >> 11) / float(1 << 53) * cum[-1]
        return min(bisect.bisect_right(cum, x), n - 1)

    return [(pick(ct), pick(ch)) for _ in range(m)]


class Exhausted(NamedTuple):
    budget: int


class Optimum(NamedTuple):
    size: int
    removed: tuple[int, ...]


def brute_force_min_removal(g: DiGraph, budget: int | None = None) -> Optimum | Exhausted:
    """Smallest removal set, lexicographically first among the smallest.

    Subsets of edge ids are tried by size, then in lexicographic order of the
    sorted id tuple; each candidate is checked with the saturating path
    counter.  Returns :class:`Exhausted` when nothing of size <= ``budget``
    works.
    """
    order = require_acyclic(g)
    if budget is None:
        budget = g.m
    ids = g.edge_ids
    heads = g.heads
    base_out = g.out
    for k in range(min(budget, g.m) + 1):
        for combo in itertools.combinations(ids, k):
            drop = set(combo)
            out = [tuple(e for e in adj if e not in drop) for adj in base_out] if drop else base_out
            # a subgraph of a DAG keeps the parent's topological order
            if _count_core(g.n, out, heads, order).ok:
                return Optimum(k, combo)
    return Exhausted(budget)
