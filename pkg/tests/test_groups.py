from itertools import product as cartesian

import pytest

from steiner_sparse import groups
from steiner_sparse.errors import UsageError
from steiner_sparse.groups import GroupSpec, add, sum_elements


def all_small_groups():
    specs = [groups.cyclic(n) for n in range(1, 17)]
    specs += [groups.binary(d) for d in range(1, 5)]
    specs += [groups.product(m, d) for m in range(2, 9) for d in range(1, 4) if m << d <= 16]
    return specs


def test_orders():
    assert groups.cyclic(6).order == 6
    assert groups.binary(3).order == 8
    assert groups.product(3, 2).order == 12


@pytest.mark.parametrize("spec,a,b,expected", [
    (groups.cyclic(6), 2, 5, 1),
    (groups.binary(3), 3, 5, 6),
    (groups.product(3, 2), 6, 11, 1),
])
def test_add_examples(spec, a, b, expected):
    assert add(spec, a, b) == expected


def test_product_encoding():
    g = groups.product(3, 2)
    assert g.decode(6) == (1, 2)
    assert g.decode(11) == (2, 3)
    assert g.encode(0, 1) == 1


def test_sum_examples():
    assert sum_elements(groups.binary(3), []) == 0
    assert sum_elements(groups.binary(3), [1, 2, 3]) == 0
    assert sum_elements(groups.cyclic(6), [1, 3, 4, 5]) == 1


@pytest.mark.parametrize("spec", all_small_groups(), ids=str)
def test_abelian_group_axioms(spec):
    elems = range(spec.order)
    for a, b in cartesian(elems, elems):
        assert add(spec, a, b) == add(spec, b, a)
        assert add(spec, a, 0) == a
    for a, b, c in cartesian(elems, elems, elems):
        assert add(spec, add(spec, a, b), c) == add(spec, a, add(spec, b, c))


@pytest.mark.parametrize("d", range(1, 5))
def test_binary_self_inverse_and_product_one(d):
    g, p = groups.binary(d), groups.product(1, d)
    assert p == g
    for a in range(g.order):
        assert add(g, a, a) == 0
        for b in range(g.order):
            assert add(p, a, b) == add(g, a, b)


@pytest.mark.parametrize("spec", all_small_groups(), ids=str)
def test_encoding_round_trip(spec):
    for idx in range(spec.order):
        assert spec.encode(*spec.decode(idx)) == idx
    assert spec.decode(0) == (0, 0)


@pytest.mark.parametrize("token", ["Z6", "Z2", "Z2^3", "Z12xZ2^3"])
def test_token_round_trip(token):
    assert GroupSpec.parse(token).token == token


def test_tokens_distinguish_cyclic_two_and_binary():
    assert GroupSpec.parse("Z2") == groups.cyclic(2)
    assert GroupSpec.parse("Z2^1") == groups.binary(1)
    assert GroupSpec.parse("Z1xZ2^3") == groups.binary(3)


@pytest.mark.parametrize("call", [
    lambda: add(groups.cyclic(6), 6, 0),
    lambda: add(groups.binary(3), -1, 0),
    lambda: groups.product(3, 2).encode(3, 0),
    lambda: GroupSpec.parse("Q8"),
])
def test_usage_errors(call):
    with pytest.raises(UsageError):
        call()
