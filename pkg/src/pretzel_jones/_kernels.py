"""Compiled inner loop of the brute-force state sum."""
import numpy as np
from numba import njit


@njit(cache=True)
def _find(parent, e):
    root = e
    while parent[root] != root:
        root = parent[root]
    while parent[e] != root:
        nxt = parent[e]
        parent[e] = root
        e = nxt
    return root


@njit(cache=True)
def state_histogram_kernel(plus, minus, n_edges):
    """hist[k, L] over all 2^c states, by depth-first walk over crossings.

    Level x of the walk holds the union-find after smoothing crossings
    0..x-1, so sibling states share the work of their common prefix.
    """
    c = plus.shape[0]
    hist = np.zeros((c + 1, n_edges + 1), dtype=np.int64)
    parents = np.empty((c + 1, n_edges), dtype=np.int64)
    loops = np.empty(c + 1, dtype=np.int64)
    minus_count = np.zeros(c + 1, dtype=np.int64)
    choice = np.zeros(c + 1, dtype=np.int64)
    for e in range(n_edges):
        parents[0, e] = e
    loops[0] = n_edges
    if c == 0:
        hist[0, n_edges] += 1
        return hist
    depth = 0
    choice[0] = -1
    while depth >= 0:
        choice[depth] += 1
        if choice[depth] > 1:
            depth -= 1
            continue
        row = minus[depth] if choice[depth] == 1 else plus[depth]
        nxt = depth + 1
        for e in range(n_edges):
            parents[nxt, e] = parents[depth, e]
        count = loops[depth]
        for j in range(0, 4, 2):
            ra = _find(parents[nxt], row[j])
            rb = _find(parents[nxt], row[j + 1])
            if ra != rb:
                parents[nxt, ra] = rb
                count -= 1
        loops[nxt] = count
        minus_count[nxt] = minus_count[depth] + choice[depth]
        if nxt == c:
            hist[minus_count[nxt], count] += 1
        else:
            depth = nxt
            choice[depth] = -1
    return hist
