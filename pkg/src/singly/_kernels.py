"""Compiled multi-root DFS over CSR arrays.

Mirrors :func:`singly.dfs.sweep` run once per root; the pure-Python version
stays the reference and the test suite checks the two against each other.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    njit = None


def _multi_sweep(indptr, heads, roots, n):
    m = heads.shape[0]
    cf = np.zeros(m, dtype=np.uint8)
    tree = np.zeros(m, dtype=np.uint8)
    seen = np.full(n, -1, dtype=np.int64)
    ptr = np.zeros(n, dtype=np.int64)
    stack = np.zeros(max(n, 1), dtype=np.int64)
    for k in range(roots.shape[0]):
        r = roots[k]
        seen[r] = k
        ptr[r] = indptr[r]
        sp = 0
        stack[0] = r
        while sp >= 0:
            v = stack[sp]
            p = ptr[v]
            if p < indptr[v + 1]:
                ptr[v] = p + 1
                w = heads[p]
                if seen[w] == k:
                    cf[p] = 1
                else:
                    seen[w] = k
                    tree[p] = 1
                    ptr[w] = indptr[w]
                    sp += 1
                    stack[sp] = w
            else:
                sp -= 1
    return cf, tree


multi_sweep = njit(cache=True, nogil=True)(_multi_sweep) if njit is not None else None
