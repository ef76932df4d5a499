"""Compiled depth-limited search over simple paths.

Visited sets and adjacency rows are multiword bitsets (``uint64`` words), so
any node count works; karate-sized graphs use a single word.  Before
descending into a node the kernel runs a bit-parallel BFS in the graph minus
the current path; the branch is cut when the target is unreachable or
farther than the remaining depth budget.  The cut only discards subtrees
that contain no counted path, so counts stay exact.
"""

import numpy as np
from numba import njit

_ONE = np.uint64(1)
_DEBRUIJN = np.uint64(0x03F79D71B4CB0A89)
_DEBRUIJN_TABLE = np.array(
    [0, 1, 48, 2, 57, 49, 28, 3, 61, 58, 50, 42, 38, 29, 17, 4,
     62, 55, 59, 36, 53, 51, 43, 22, 45, 39, 33, 30, 24, 18, 12, 5,
     63, 47, 56, 27, 60, 41, 37, 16, 54, 35, 52, 21, 44, 32, 23, 11,
     46, 26, 40, 15, 34, 20, 31, 10, 25, 14, 19, 9, 13, 8, 7, 6],
    dtype=np.int64,
)


def adjacency_bitsets(adjacency):
    n = len(adjacency)
    words = (n + 63) // 64
    masks = np.zeros((n, words), dtype=np.uint64)
    for i, nbrs in enumerate(adjacency):
        for j in nbrs:
            masks[i, j >> 6] |= np.uint64(1) << np.uint64(j & 63)
    return masks


def csr_neighbors(adjacency):
    ptr = np.zeros(len(adjacency) + 1, dtype=np.int64)
    flat = []
    for i, nbrs in enumerate(adjacency):
        flat.extend(nbrs)
        ptr[i + 1] = len(flat)
    return ptr, np.array(flat, dtype=np.int64)


@njit(cache=True, nogil=True)
def _lowest_index(low):
    # index of the single set bit in ``low``
    return _DEBRUIJN_TABLE[np.int64((low * _DEBRUIJN) >> np.uint64(58))]


@njit(cache=True, nogil=True)
def _set(bits, i):
    bits[i >> 6] |= _ONE << np.uint64(i & 63)


@njit(cache=True, nogil=True)
def _clear(bits, i):
    bits[i >> 6] &= ~(_ONE << np.uint64(i & 63))


@njit(cache=True, nogil=True)
def _test(bits, i):
    return (bits[i >> 6] >> np.uint64(i & 63)) & _ONE


@njit(cache=True, nogil=True)
def residual_distance(masks, start, target, visited, budget, seen, frontier, nxt):
    """Hops from ``start`` to ``target`` avoiding ``visited``; ``budget + 1`` if over budget."""
    words = masks.shape[1]
    for w in range(words):
        seen[w] = visited[w]
        frontier[w] = 0
    _set(seen, start)
    _set(frontier, start)
    tw = target >> 6
    tb = _ONE << np.uint64(target & 63)
    d = 0
    while d <= budget:
        if frontier[tw] & tb:
            return d
        any_new = False
        for w in range(words):
            nxt[w] = 0
        for w in range(words):
            f = frontier[w]
            while f:
                low = f & (~f + _ONE)
                i = w * 64 + _lowest_index(low)
                for x in range(words):
                    nxt[x] |= masks[i, x]
                f ^= low
        for w in range(words):
            nxt[w] &= ~seen[w]
            if nxt[w]:
                any_new = True
            seen[w] |= nxt[w]
            frontier[w] = nxt[w]
        if not any_new:
            break
        d += 1
    return budget + 1


@njit(cache=True, nogil=True)
def count_branch(masks, ptr, nbrs, source, target, first, limit):
    """Per-length path counts for paths ``source -> first -> ... -> target``.

    Returns an int64 array indexed by length (index 0 unused).
    """
    n = masks.shape[0]
    words = masks.shape[1]
    counts = np.zeros(limit + 1, dtype=np.int64)
    if first == target:
        counts[1] = 1
        return counts
    if limit < 2:
        return counts

    visited = np.zeros(words, dtype=np.uint64)
    seen = np.empty(words, dtype=np.uint64)
    frontier = np.empty(words, dtype=np.uint64)
    nxt = np.empty(words, dtype=np.uint64)
    _set(visited, source)
    if residual_distance(masks, first, target, visited, limit - 1, seen, frontier, nxt) > limit - 1:
        return counts
    _set(visited, first)

    stack_node = np.empty(n + 1, dtype=np.int64)
    stack_pos = np.empty(n + 1, dtype=np.int64)
    # stack depth d holds the node reached after d edges
    depth = 1
    stack_node[1] = first
    stack_pos[1] = ptr[first]
    while depth >= 1:
        u = stack_node[depth]
        p = stack_pos[depth]
        if p == ptr[u + 1]:
            _clear(visited, u)
            depth -= 1
            continue
        stack_pos[depth] = p + 1
        v = nbrs[p]
        if _test(visited, v):
            continue
        if v == target:
            counts[depth + 1] += 1
            continue
        if depth + 2 > limit:
            continue
        budget = limit - depth - 1
        if residual_distance(masks, v, target, visited, budget, seen, frontier, nxt) > budget:
            continue
        _set(visited, v)
        depth += 1
        stack_node[depth] = v
        stack_pos[depth] = ptr[v]
    return counts
