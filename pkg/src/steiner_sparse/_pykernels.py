"""Pure-Python kernels.

These are the reference semantics for the compiled twins in
``_ckernels.pyx``; both must return identical arrays. Edge arrays are
``int32`` of shape ``(E, r)``, each row strictly increasing, rows in
lexicographic order.
"""
from collections import defaultdict
from itertools import combinations

import numpy as np


def _as_array(rows, width, dtype=np.int32):
    return np.array(rows, dtype=dtype).reshape(-1, width)


def zero_sum_edges(r, m, d, target, shadow, threads=1):
    """All r-sets of Z_m + Z_2^d (product encoding) summing to ``target``.

    Each (r-1)-set S in lexicographic order is completed by the unique
    vertex v with sum(S) + v = target, kept only when v > max(S), so
    edges come out once each and already sorted. With ``shadow`` set,
    the binary parts of an edge must be distinct and have pairwise-
    distinct XORs, which is the same as having no zero-sum 4-subset.
    """
    mask = (1 << d) - 1
    nv = m << d
    tx, ty = target >> d, target & mask
    ycnt = [0] * (1 << d)
    pcnt = [0] * (1 << d)
    cur = []
    out = []

    def extend(start, stop, sx, sy):
        depth = len(cur)
        if depth == r - 1:
            vy = ty ^ sy
            v = (((tx - sx) % m) << d) | vy
            if v <= cur[-1]:
                return
            if shadow and (ycnt[vy] or any(pcnt[vy ^ (u & mask)] for u in cur)):
                return
            out.append((*cur, v))
            return
        for v in range(start, stop):
            y = v & mask
            if shadow:
                if ycnt[y] or any(pcnt[y ^ (u & mask)] for u in cur):
                    continue
                ycnt[y] += 1
                for u in cur:
                    pcnt[y ^ (u & mask)] += 1
            cur.append(v)
            extend(v + 1, nv - (r - 2 - depth), (sx + (v >> d)) % m, sy ^ y)
            cur.pop()
            if shadow:
                ycnt[y] -= 1
                for u in cur:
                    pcnt[y ^ (u & mask)] -= 1

    if r >= 2 and nv >= r:
        extend(0, nv - (r - 1), 0, 0)
    return _as_array(out, r)


def shared_pairs(edges, n, k):
    """Pairs (a, b), a < b, of edge positions sharing at least k vertices."""
    groups = defaultdict(list)
    for pos, e in enumerate(edges.tolist()):
        for sub in combinations(e, k):
            groups[sub].append(pos)
    pairs = set()
    for ps in groups.values():
        pairs.update(combinations(ps, 2))
    return _as_array(sorted(pairs), 2, np.int64)


def sparse3_triples(edges, n, pairs, cap, threads=1):
    """Triples a < b < c of edges spanning at most r + 2 vertices.

    ``pairs`` must be every pair sharing at least r - 2 vertices, in
    lexicographic order; a violating triple is reported from its
    smallest pair only. Returns ``(total, first cap triples)``.
    """
    r = edges.shape[1]
    rows = [tuple(e) for e in edges.tolist()]
    lookup = {e: i for i, e in enumerate(rows)}
    fwd = defaultdict(list)
    for a, b in pairs.tolist():
        fwd[a].append(b)
    total = 0
    found = []
    for a, b in pairs.tolist():
        xs = set(rows[a]).union(rows[b])
        if len(xs) == r + 2:
            x = sorted(xs)
            cs = []
            for drop in combinations(x, 2):
                c = lookup.get(tuple(v for v in x if v not in drop), -1)
                if c > b:
                    cs.append(c)
            cs.sort()
        else:
            cs = [c for c in fwd[a] if c > b and len(xs.union(rows[c])) <= r + 2]
        for c in cs:
            total += 1
            if len(found) < cap:
                found.append((a, b, c))
    return total, _as_array(found, 3, np.int64)


def count_covered(edges, n, k):
    """Number of distinct k-subsets contained in some edge."""
    seen = set()
    for e in edges.tolist():
        seen.update(combinations(e, k))
    return len(seen)
