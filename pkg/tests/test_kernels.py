import random

import numpy as np
import pytest

from steiner_sparse import kernels

from oracles import naive_binary, naive_mod_sum, naive_product, random_hypergraph


def canon(rows, r):
    return np.array(sorted(tuple(sorted(e)) for e in rows), dtype=np.int32).reshape(-1, r)


@pytest.mark.parametrize("n", [4, 6, 8, 10, 14])
def test_zero_sum_mod_sum(backend, n):
    got = kernels.zero_sum_edges(4, n, 0, 1, False, backend=backend)
    assert np.array_equal(got, canon(naive_mod_sum(n), 4))


@pytest.mark.parametrize("r,d", [(5, 3), (5, 4), (6, 4), (7, 4), (8, 4)])
def test_zero_sum_binary(backend, r, d):
    got = kernels.zero_sum_edges(r, 1, d, 0, True, backend=backend)
    assert np.array_equal(got, canon(naive_binary(r, d), r))


@pytest.mark.parametrize("r,m,d", [(5, 2, 3), (5, 3, 2), (5, 2, 4), (6, 2, 3)])
def test_zero_sum_product(backend, r, m, d):
    got = kernels.zero_sum_edges(r, m, d, 0, True, backend=backend)
    assert np.array_equal(got, canon(naive_product(r, m, d), r))


@pytest.mark.parametrize("threads", [1, 2, 5])
def test_thread_count_does_not_change_output(backend, threads):
    ref = kernels.zero_sum_edges(5, 2, 4, 0, True, backend="python")
    assert np.array_equal(kernels.zero_sum_edges(5, 2, 4, 0, True, threads=threads, backend=backend), ref)


def _brute_pairs(rows, k):
    return [[a, b] for a in range(len(rows)) for b in range(a + 1, len(rows))
            if len(set(rows[a]) & set(rows[b])) >= k]


def _brute_triples(rows, r):
    out = []
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            for c in range(b + 1, len(rows)):
                if len(set(rows[a]) | set(rows[b]) | set(rows[c])) <= r + 2:
                    out.append((a, b, c))
    return out


def test_pair_and_triple_kernels_random(backend, seed):
    rng = random.Random(seed)
    for _ in range(120):
        r = rng.randint(2, 5)
        n = rng.randint(r + 1, 9)
        edges = canon(random_hypergraph(rng, r, n, 14), r)
        rows = edges.tolist()
        for k in range(0, r):
            assert kernels.shared_pairs(edges, n, k, backend=backend).tolist() == _brute_pairs(rows, k)
        pairs = kernels.shared_pairs(edges, n, r - 2, backend=backend)
        total, found = kernels.sparse3_triples(edges, n, pairs, 5, backend=backend)
        brute = _brute_triples(rows, r)
        assert total == len(brute)
        assert found.tolist() == [list(t) for t in brute[:5]]


def test_backends_agree_on_mod_sum_pipeline():
    if len(kernels.available_backends()) < 2:
        pytest.skip("compiled kernels not built")
    edges = kernels.zero_sum_edges(4, 30, 0, 1, False)
    for k in (2, 3):
        assert np.array_equal(kernels.shared_pairs(edges, 30, k, backend="python"),
                              kernels.shared_pairs(edges, 30, k, backend="cython"))
    assert kernels.count_covered(edges, 30, 3, backend="python") == kernels.count_covered(edges, 30, 3, backend="cython")


def test_sparse3_threads_preserve_order(backend):
    # dense random 4-graph with many violations
    rng = random.Random(7)
    edges = canon(random_hypergraph(rng, 4, 9, 40), 4)
    pairs = kernels.shared_pairs(edges, 9, 2)
    one = kernels.sparse3_triples(edges, 9, pairs, 10_000, threads=1, backend=backend)
    many = kernels.sparse3_triples(edges, 9, pairs, 10_000, threads=3, backend=backend)
    assert one[0] == many[0] > 0
    assert np.array_equal(one[1], many[1])


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.zero_sum_edges(4, 6, 0, 1, False, backend="fortran")
