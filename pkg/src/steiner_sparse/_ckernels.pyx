# distutils: language = c++
"""Compiled kernels. Semantics are defined by ``_pykernels``.

The inner loops run without the GIL so that ``threads > 1`` splits the
outer enumeration across a thread pool; chunks are contiguous and
concatenated in order, so output never depends on the thread count.
"""
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint64_t, uint8_t
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy
from libcpp.algorithm cimport sort, unique
from libcpp.vector cimport vector

cdef enum:
    MAXR = 32
    MAXDROP = 561  # C(MAXR + 2, 2)

MAX_UNIFORMITY = MAXR


def _pool_map(fn, chunks, threads):
    if threads <= 1 or len(chunks) <= 1:
        return [fn(*c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda c: fn(*c), chunks))


def _binom_table(int n, int r):
    # binom[v, j] = C(v, j); callers guarantee C(n, r) fits in int64
    t = np.zeros((n + 1, r + 2), dtype=np.int64)
    t[:, 0] = 1
    for v in range(1, n + 1):
        t[v, 1:] = t[v - 1, 1:] + t[v - 1, :-1]
    return t


# ---------------------------------------------------------------- zero sums

cdef struct Walk:
    int r, m, d, nv, tx, ty, mask
    bint shadow
    int cur[MAXR]
    int* ycnt
    int* pcnt
    vector[int32_t]* out


cdef void _extend(Walk* w, int depth, int start, int stop, int sx, int sy) noexcept nogil:
    cdef int v, y, i, vx, vy, sx2
    cdef bint bad
    if depth == w.r - 1:
        vx = w.tx - sx
        if vx < 0:
            vx += w.m
        vy = w.ty ^ sy
        v = (vx << w.d) | vy
        if v <= w.cur[depth - 1]:
            return
        if w.shadow:
            if w.ycnt[vy]:
                return
            for i in range(depth):
                if w.pcnt[vy ^ (w.cur[i] & w.mask)]:
                    return
        for i in range(depth):
            w.out.push_back(w.cur[i])
        w.out.push_back(v)
        return
    for v in range(start, stop):
        y = v & w.mask
        if w.shadow:
            if w.ycnt[y]:
                continue
            bad = False
            for i in range(depth):
                if w.pcnt[y ^ (w.cur[i] & w.mask)]:
                    bad = True
                    break
            if bad:
                continue
            w.ycnt[y] += 1
            for i in range(depth):
                w.pcnt[y ^ (w.cur[i] & w.mask)] += 1
        w.cur[depth] = v
        sx2 = sx + (v >> w.d)
        if sx2 >= w.m:
            sx2 -= w.m
        _extend(w, depth + 1, v + 1, w.nv - (w.r - 2 - depth), sx2, sy ^ y)
        if w.shadow:
            w.ycnt[y] -= 1
            for i in range(depth):
                w.pcnt[y ^ (w.cur[i] & w.mask)] -= 1


def _zero_sum_chunk(int r, int m, int d, int target, bint shadow, int lo, int hi):
    cdef Walk w
    cdef vector[int32_t] out
    w.r, w.m, w.d = r, m, d
    w.nv = m << d
    w.mask = (1 << d) - 1
    w.tx, w.ty = target >> d, target & w.mask
    w.shadow = shadow
    w.out = &out
    w.ycnt = <int*>calloc(1 << d, sizeof(int))
    w.pcnt = <int*>calloc(1 << d, sizeof(int))
    if w.ycnt == NULL or w.pcnt == NULL:
        free(w.ycnt)
        free(w.pcnt)
        raise MemoryError()
    try:
        with nogil:
            _extend(&w, 0, lo, hi, 0, 0)
    finally:
        free(w.ycnt)
        free(w.pcnt)
    arr = np.empty(out.size(), dtype=np.int32)
    cdef int32_t[::1] view = arr
    if out.size():
        memcpy(&view[0], out.data(), out.size() * sizeof(int32_t))
    return arr.reshape(-1, r)


def zero_sum_edges(int r, int m, int d, int target, bint shadow, int threads=1):
    if not 2 <= r <= MAXR:
        raise ValueError(f"uniformity {r} outside compiled kernel range")
    cdef int nv = m << d
    if nv < r:
        return np.empty((0, r), dtype=np.int32)
    top = nv - (r - 1)
    nchunks = 1 if threads <= 1 else min(top, 8 * threads)
    # the first vertex carries most of the work near 0, so cut finely there
    bounds = sorted({round(top * (1 - (1 - i / nchunks) ** 0.5)) for i in range(nchunks + 1)})
    chunks = [(r, m, d, target, shadow, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]
    parts = _pool_map(_zero_sum_chunk, chunks, threads)
    return np.concatenate(parts) if parts else np.empty((0, r), dtype=np.int32)


# ----------------------------------------------------------- subset ranks

cdef void _subset_ranks(const int32_t[:, ::1] edges, const int32_t[:, ::1] combos,
                        const int64_t[:, ::1] binom, int64_t* out) noexcept nogil:
    # colex rank of every k-subset of every edge, edge-major
    cdef Py_ssize_t e, c, j, E = edges.shape[0], C = combos.shape[0], k = combos.shape[1]
    cdef int64_t key
    for e in range(E):
        for c in range(C):
            key = 0
            for j in range(k):
                key += binom[edges[e, combos[c, j]], j + 1]
            out[e * C + c] = key


def _combos(int r, int k):
    rows = list(combinations(range(r), k))
    return np.array(rows, dtype=np.int32).reshape(len(rows), k)


def shared_pairs(const int32_t[:, ::1] edges, int n, int k):
    cdef Py_ssize_t E = edges.shape[0], r = edges.shape[1]
    if E < 2:
        return np.empty((0, 2), dtype=np.int64)
    cdef const int32_t[:, ::1] combos = _combos(r, k)
    cdef const int64_t[:, ::1] binom = _binom_table(n, r)
    cdef Py_ssize_t C = combos.shape[0]
    keys = np.empty(E * C, dtype=np.int64)
    cdef int64_t[::1] kv = keys
    with nogil:
        _subset_ranks(edges, combos, binom, &kv[0])
    order_arr = np.argsort(keys, kind="stable")
    cdef const int64_t[::1] order = order_arr
    cdef const int64_t[::1] sk = keys[order_arr]
    cdef vector[int64_t] codes
    cdef Py_ssize_t i = 0, j, p, q, N = E * C
    with nogil:
        while i < N:
            j = i + 1
            while j < N and sk[j] == sk[i]:
                j += 1
            # stable sort keeps owners ascending inside a run
            for p in range(i, j):
                for q in range(p + 1, j):
                    codes.push_back((order[p] // C) * E + order[q] // C)
            i = j
    arr = np.empty(codes.size(), dtype=np.int64)
    cdef int64_t[::1] av = arr
    if codes.size():
        memcpy(&av[0], codes.data(), codes.size() * sizeof(int64_t))
    arr = np.unique(arr)
    return np.stack([arr // E, arr % E], axis=1).astype(np.int64)


def count_covered(const int32_t[:, ::1] edges, int n, int k):
    from math import comb
    cdef Py_ssize_t E = edges.shape[0], r = edges.shape[1]
    if E == 0:
        return 0
    cdef const int32_t[:, ::1] combos = _combos(r, k)
    cdef const int64_t[:, ::1] binom = _binom_table(n, r)
    cdef Py_ssize_t C = combos.shape[0], i, N = E * C
    cdef int64_t total = comb(n, k), key, seen = 0
    cdef uint8_t* bits
    cdef vector[int64_t] keys
    keys.resize(N)
    with nogil:
        _subset_ranks(edges, combos, binom, keys.data())
    if total <= (1 << 33):
        bits = <uint8_t*>calloc(total // 8 + 1, 1)
        if bits == NULL:
            raise MemoryError()
        with nogil:
            for i in range(N):
                key = keys[i]
                if not (bits[key >> 3] >> (key & 7)) & 1:
                    bits[key >> 3] |= <uint8_t>(1 << (key & 7))
                    seen += 1
        free(bits)
        return seen
    with nogil:
        sort(keys.begin(), keys.end())
        seen = unique(keys.begin(), keys.end()) - keys.begin()
    return seen


# ------------------------------------------------------------- 3-sparsity

cdef struct Lookup:
    const int64_t* keys
    const int32_t* vals
    int bits
    const uint8_t* present  # optional bitset over all ranks, NULL when too large


cdef inline int _find(const Lookup* h, int64_t key) noexcept nogil:
    if h.present != NULL and not (h.present[key >> 3] >> (key & 7)) & 1:
        return -1
    cdef uint64_t slot = (<uint64_t>key * <uint64_t>0x9E3779B97F4A7C15) >> (64 - h.bits)
    cdef uint64_t mask = (<uint64_t>1 << h.bits) - 1
    while h.keys[slot] != -1:
        if h.keys[slot] == key:
            return h.vals[slot]
        slot = (slot + 1) & mask
    return -1


def _build_lookup(const int32_t[:, ::1] edges, const int64_t[:, ::1] binom):
    cdef Py_ssize_t E = edges.shape[0], r = edges.shape[1], e, j
    cdef int bits = 4
    while (1 << bits) < 2 * E + 2:
        bits += 1
    keys_arr = np.full(1 << bits, -1, dtype=np.int64)
    vals_arr = np.full(1 << bits, -1, dtype=np.int32)
    cdef int64_t[::1] keys = keys_arr
    cdef int32_t[::1] vals = vals_arr
    cdef int64_t key
    cdef uint64_t slot, mask = (<uint64_t>1 << bits) - 1
    with nogil:
        for e in range(E):
            key = 0
            for j in range(r):
                key += binom[edges[e, j], j + 1]
            slot = (<uint64_t>key * <uint64_t>0x9E3779B97F4A7C15) >> (64 - bits)
            while keys[slot] != -1:
                slot = (slot + 1) & mask
            keys[slot] = key
            vals[slot] = <int32_t>e
    return keys_arr, vals_arr, bits


_PRESENCE_LIMIT = 1 << 31  # bits


def _build_presence(const int64_t[::1] keys, int64_t total):
    if total > _PRESENCE_LIMIT:
        return None
    arr = np.zeros(total // 8 + 1, dtype=np.uint8)
    cdef uint8_t[::1] bits = arr
    cdef Py_ssize_t i
    cdef int64_t key
    with nogil:
        for i in range(keys.shape[0]):
            key = keys[i]
            if key >= 0:
                bits[key >> 3] |= <uint8_t>(1 << (key & 7))
    return arr


cdef int _merge(const int32_t* a, const int32_t* b, int r, int* out) noexcept nogil:
    cdef int i = 0, j = 0, n = 0
    while i < r and j < r:
        if a[i] < b[j]:
            out[n] = a[i]; i += 1
        elif b[j] < a[i]:
            out[n] = b[j]; j += 1
        else:
            out[n] = a[i]; i += 1; j += 1
        n += 1
    while i < r:
        out[n] = a[i]; i += 1; n += 1
    while j < r:
        out[n] = b[j]; j += 1; n += 1
    return n


cdef int _outside(const int32_t* e, int r, const int* x, int nx) noexcept nogil:
    # number of entries of sorted e missing from sorted x
    cdef int i = 0, j = 0, miss = 0
    while i < r:
        if j >= nx or e[i] < x[j]:
            miss += 1; i += 1
        elif e[i] == x[j]:
            i += 1; j += 1
        else:
            j += 1
    return miss


cdef int64_t _sparse3_range(const int32_t[:, ::1] edges, const int64_t[:, ::1] binom,
                            const Lookup* h, const int64_t[:, ::1] pairs,
                            const int64_t[::1] indptr, Py_ssize_t lo, Py_ssize_t hi,
                            Py_ssize_t cap, vector[int64_t]* out) noexcept nogil:
    cdef int r = edges.shape[1], nx, p1, p2, i, j, nc, t
    cdef int x[2 * MAXR]
    cdef int buf[MAXDROP]
    cdef int64_t a, b, c, key, total = 0
    cdef Py_ssize_t p, q
    for p in range(lo, hi):
        a = pairs[p, 0]
        b = pairs[p, 1]
        nx = _merge(&edges[a, 0], &edges[b, 0], r, x)
        nc = 0
        if nx == r + 2:
            for p1 in range(nx):
                for p2 in range(p1 + 1, nx):
                    key = 0
                    j = 0
                    for i in range(nx):
                        if i != p1 and i != p2:
                            j += 1
                            key += binom[x[i], j]
                    c = _find(h, key)
                    if c > b:
                        # insertion keeps buf ascending
                        t = nc
                        while t > 0 and buf[t - 1] > c:
                            buf[t] = buf[t - 1]
                            t -= 1
                        buf[t] = <int>c
                        nc += 1
            for t in range(nc):
                total += 1
                if <Py_ssize_t>out.size() < 3 * cap:
                    out.push_back(a); out.push_back(b); out.push_back(buf[t])
        else:
            for q in range(indptr[a], indptr[a + 1]):
                c = pairs[q, 1]
                if c <= b:
                    continue
                if nx + _outside(&edges[c, 0], r, x, nx) <= r + 2:
                    total += 1
                    if <Py_ssize_t>out.size() < 3 * cap:
                        out.push_back(a); out.push_back(b); out.push_back(c)
    return total


def sparse3_triples(const int32_t[:, ::1] edges, int n, const int64_t[:, ::1] pairs,
                    Py_ssize_t cap, int threads=1):
    cdef Py_ssize_t E = edges.shape[0], P = pairs.shape[0]
    cdef int r = edges.shape[1]
    if r > MAXR:
        raise ValueError(f"uniformity {r} outside compiled kernel range")
    if P == 0:
        return 0, np.empty((0, 3), dtype=np.int64)
    binom_arr = _binom_table(n, r)
    keys_arr, vals_arr, bits = _build_lookup(edges, binom_arr)
    presence_arr = _build_presence(keys_arr, int(binom_arr[n, r]))
    # pairs are lexicographic, so pairs[indptr[a]:indptr[a+1], 1] are a's later neighbours
    indptr_arr = np.searchsorted(np.asarray(pairs)[:, 0], np.arange(E + 1)).astype(np.int64)

    def run(Py_ssize_t lo, Py_ssize_t hi):
        cdef const int64_t[:, ::1] binom = binom_arr
        cdef const int64_t[::1] hk = keys_arr
        cdef const int32_t[::1] hv = vals_arr
        cdef const int64_t[::1] indptr = indptr_arr
        cdef Lookup h
        cdef vector[int64_t] out
        cdef int64_t total
        h.keys = &hk[0]
        h.vals = &hv[0]
        h.bits = bits
        h.present = NULL
        cdef const uint8_t[::1] pres
        if presence_arr is not None:
            pres = presence_arr
            h.present = &pres[0]
        with nogil:
            total = _sparse3_range(edges, binom, &h, pairs, indptr, lo, hi, cap, &out)
        arr = np.empty(out.size(), dtype=np.int64)
        cdef int64_t[::1] av = arr
        if out.size():
            memcpy(&av[0], out.data(), out.size() * sizeof(int64_t))
        return total, arr.reshape(-1, 3)

    nchunks = 1 if threads <= 1 else min(P, 4 * threads)
    bounds = [P * i // nchunks for i in range(nchunks + 1)]
    parts = _pool_map(run, list(zip(bounds, bounds[1:])), threads)
    total = sum(t for t, _ in parts)
    found = np.concatenate([f for _, f in parts])[:cap]
    return total, found
