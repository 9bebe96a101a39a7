"""Exit criteria. Each test is one criterion (criterion 6 is split in two);
the run ends with one PASS/FAIL line per criterion."""
import random
import time
from fractions import Fraction
from itertools import combinations
from math import comb, isqrt

import pytest

from steiner_sparse import (
    ForbiddenFamily, Hypergraph, build_auto, build_binary, build_index, build_mod_sum,
    build_product, check_forbidden, check_linear, check_sparse3, max_search, naive_check,
    select_params,
)
from steiner_sparse.counting import linear_upper_bound, predicted_mod_sum_edges, predicted_mod_sum_zero_triples
from steiner_sparse.edgelist import dumps, loads

from oracles import has_zero_sum_subset, naive_binary, naive_product, random_hypergraph

MOD_SUM_NS = [4, 6, 8, 10, 12, 20, 50, 100]
BINARY_CASES = [(r, d) for r in (5, 6, 7, 8) for d in (3, 4)]
PRODUCT_CASES = [(2, 3), (3, 3), (4, 3)]
# pinned once from oracles.naive_binary
BINARY_GOLDEN = {(5, 3): 0, (6, 3): 0, (7, 3): 0, (8, 3): 0, (5, 4): 168, (6, 4): 448, (7, 4): 0, (8, 4): 0}
# pinned once from build_auto(5, n): 64 -> Z8xZ2^3, 128 -> Z16xZ2^3, 256 -> Z16xZ2^4
DENSITY_GOLDEN = {64: Fraction(0), 128: Fraction(0), 256: Fraction(172032, 546227)}
DEFAULT = lambda r: [ForbiddenFamily(r + 1, 2), ForbiddenFamily(r + 2, 3)]  # noqa: E731


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.1f} s, limit {self.limit} s"


def constructed():
    """Every hypergraph built in criteria 1-4."""
    out = [build_mod_sum(n) for n in MOD_SUM_NS]
    out += [build_binary(r, d) for r, d in BINARY_CASES]
    out += [build_product(5, m, d) for m, d in PRODUCT_CASES]
    return out


@pytest.mark.criterion(1, "exact mod-sum edge and degree-0 triple counts", limit=5)
def test_criterion_1_mod_sum_counts():
    with Timer(5):
        for n in MOD_SUM_NS:
            h = build_mod_sum(n)
            assert len(h) == Fraction(comb(n, 3), 4) - Fraction(n * (n - 2), 8) == predicted_mod_sum_edges(n)
            idx = build_index(h, 3)
            zero = comb(n, 3) - len(idx)
            assert zero == n * (n - 2) // 2 == predicted_mod_sum_zero_triples(n)


@pytest.mark.criterion(2, "mod-sum graphs are linear and 3-sparse; pruned == naive for n <= 12", limit=10)
def test_criterion_2_mod_sum_freeness():
    with Timer(10):
        for n in MOD_SUM_NS:
            h = build_mod_sum(n)
            lin, s3 = check_linear(h), check_sparse3(h)
            assert lin.passed and s3.passed, n
            if n <= 12:
                for fam, pruned in zip(DEFAULT(4), (lin, s3)):
                    naive = naive_check(h, fam)
                    assert (pruned.total, pruned.certificates) == (naive.total, naive.certificates)
                    generic = check_forbidden(h, fam)
                    assert (generic.total, generic.certificates) == (naive.total, naive.certificates)


@pytest.mark.criterion(3, "binary construction: freeness, golden counts, degree-0 iff at d=3", limit=60)
def test_criterion_3_binary():
    with Timer(60):
        for r, d in BINARY_CASES:
            h = build_binary(r, d)
            assert check_linear(h).passed
            assert check_forbidden(h, ForbiddenFamily(r + 2, 3)).passed
            assert len(h) == BINARY_GOLDEN[r, d] == len(naive_binary(r, d))
            if d == 3:
                covered = {s for e in h for s in combinations(e, r - 1)}
                for S in combinations(range(1 << d), r - 1):
                    blocked = any(has_zero_sum_subset(S, k) for k in (r - 2, r - 4, 4))
                    assert (S not in covered) == blocked, (r, S)


@pytest.mark.criterion(4, "product multiplicativity m^4 |H_3|, freeness, oracle edge set at (2,3)", limit=120)
def test_criterion_4_product():
    with Timer(120):
        base = len(build_binary(5, 3))
        for m, d in PRODUCT_CASES:
            h = build_product(5, m, d)
            assert len(h) == m ** 4 * base
            assert check_linear(h).passed and check_sparse3(h).passed
        assert list(build_product(5, 2, 3)) == naive_product(5, 2, 3)


@pytest.mark.criterion(5, "parameter selection invariants", limit=1)
def test_criterion_5_params():
    with Timer(1):
        for n in (30, 64, 100, 1000, 10**6):
            p = select_params(5, n)
            assert 0 <= n - p.m * 2 ** p.d < 2 ** p.d
            assert 2 ** p.d <= isqrt(n)  # exact: 2^d is an integer


@pytest.mark.criterion(6, "edge counts within C(n, r-1)/r (exact)", limit=120)
def test_criterion_6_upper_bound():
    with Timer(120):
        for h in constructed():
            assert Fraction(len(h)) <= linear_upper_bound(h.r, h.n)


@pytest.mark.criterion(6, "pinned r=5 density ratios at n in {64,128,256}, each in (0,1]", limit=120)
@pytest.mark.parametrize("n", sorted(DENSITY_GOLDEN))
def test_criterion_6_density(n):
    with Timer(120):
        h, meta = build_auto(5, n)
        ratio = Fraction(len(h)) / linear_upper_bound(5, h.n)
        assert ratio == DENSITY_GOLDEN[n]
        assert 0 < ratio <= 1, f"density ratio at n={n} ({meta.group}) is {ratio}"


@pytest.mark.criterion(7, "extremal search: f_2(n,3,2) = floor(n/2); ex(6) >= 2 with mod-sum witness", limit=60)
def test_criterion_7_oracle():
    with Timer(60):
        for n in range(3, 9):
            assert max_search(2, n, [ForbiddenFamily(3, 2)])[0] == n // 2
        fams = [ForbiddenFamily(5, 2), ForbiddenFamily(6, 3)]
        best, _ = max_search(4, 6, fams)
        witness = build_mod_sum(6)
        assert all(naive_check(witness, f).passed for f in fams)
        assert best >= len(witness) == 2


@pytest.mark.criterion(8, "500 random hypergraphs: pruned == naive; byte-exact round trips", limit=60)
def test_criterion_8_property_suite(seed):
    with Timer(60):
        rng = random.Random(seed)
        for _ in range(500):
            r = rng.choice([3, 4, 5])
            n = rng.randint(r + 1, 10)
            h = Hypergraph(r, n, random_hypergraph(rng, r, n, 12))
            for fam in (ForbiddenFamily(r + 1, 2), ForbiddenFamily(r + 2, 3), ForbiddenFamily(r + 3, 4)):
                ref = naive_check(h, fam, cap=10**6)
                got = check_forbidden(h, fam, cap=10**6)
                assert (got.total, got.certificates) == (ref.total, ref.certificates)
            text = dumps(h)
            back, header = loads(text)
            assert back == h and dumps(back, header) == text
        for args in [(4, n) for n in MOD_SUM_NS] + [(5, 40), (5, 64), (6, 64)]:
            h, meta = build_auto(*args)
            text = dumps(h, meta)
            back, header = loads(text)
            assert back == h and dumps(back, header) == text
