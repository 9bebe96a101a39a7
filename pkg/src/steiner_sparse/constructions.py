"""Explicit linear, 3-sparse r-graphs built from zero-sum conditions.

* mod-sum (r = 4): vertices Z_n, n even; {i, j, k, l} is an edge when
  i + j + k + l = 1 mod n.
* binary (r > 4): vertices Z_2^d; an r-set is an edge when it sums to
  zero and has no zero-sum subset of size 4 or r - 4.
* product (r > 4): vertices Z_m + Z_2^d; an r-set is an edge when its
  cyclic parts sum to zero and its binary parts (the shadow) form an
  edge of the binary construction.

All three reduce to one enumeration: walk the (r-1)-sets S in order and
complete each with the single vertex v making the group sum hit the
target, keeping the edge when v > max(S). For the binary and product
groups, a zero-sum r-set has a zero-sum (r-4)-subset exactly when it
has a zero-sum 4-subset (take complements; every element is its own
inverse), so the kernels test only the 4-subset condition.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import groups, kernels
from .errors import DomainError
from .groups import GroupSpec
from .hypergraph import Hypergraph

__all__ = [
    "ConstructionMeta", "ParamChoice", "build_mod_sum", "build_binary", "build_product",
    "select_params", "build_auto", "build", "min_feasible_n", "shadow_edge_count",
]

MOD_SUM, BINARY, PRODUCT = "mod-sum", "binary", "product"
NAMES = (MOD_SUM, BINARY, PRODUCT)


@dataclass(frozen=True)
class ConstructionMeta:
    name: str
    group: GroupSpec
    r: int
    requested_n: int
    used_n: int
    # edge count of the binary construction over the same Z_2^d, counted
    # independently of the product edges; None for mod-sum
    shadow_edges: int | None = None


@dataclass(frozen=True)
class ParamChoice:
    d: int
    m: int

    @property
    def n_used(self) -> int:
        return self.m << self.d


def build_mod_sum(n: int, threads: int = 1, backend=None) -> Hypergraph:
    if n < 4 or n % 2:
        raise DomainError(f"mod-sum construction requires even n >= 4, got n={n}")
    g = groups.cyclic(n)
    edges = kernels.zero_sum_edges(4, g.m, g.d, 1, False, threads=threads, backend=backend)
    return Hypergraph.from_canonical(4, n, edges)


def _check_r(r):
    if r <= 4:
        raise DomainError(f"binary and product constructions require r > 4, got r={r}")


def build_binary(r: int, d: int, threads: int = 1, backend=None) -> Hypergraph:
    _check_r(r)
    if d < 1 or (1 << d) < r:
        raise DomainError(f"binary construction needs 2^d >= r, got r={r} d={d}")
    edges = kernels.zero_sum_edges(r, 1, d, 0, True, threads=threads, backend=backend)
    return Hypergraph.from_canonical(r, 1 << d, edges)


def build_product(r: int, m: int, d: int, threads: int = 1, backend=None) -> Hypergraph:
    """Product construction over Z_m + Z_2^d; ``m == 1`` is the binary construction.

    When 2^d < r no shadow has r distinct binary parts and the result is
    empty, which is still a valid (trivially sparse) hypergraph.
    """
    _check_r(r)
    if m < 1 or d < 1:
        raise DomainError(f"product construction needs m >= 1 and d >= 1, got m={m} d={d}")
    if m == 1:
        return build_binary(r, d, threads, backend)
    if (m << d) < r:
        raise DomainError(f"product construction needs m*2^d >= r, got {m << d} < {r}")
    edges = kernels.zero_sum_edges(r, m, d, 0, True, threads=threads, backend=backend)
    return Hypergraph.from_canonical(r, m << d, edges)


def _exponent(n):
    # largest d with 4^d <= n, i.e. floor(log2 sqrt n) in exact arithmetic
    d = 0
    while 4 ** (d + 1) <= n:
        d += 1
    return d


def min_feasible_n(r: int) -> int:
    n = 4
    while True:
        d = _exponent(n)
        if ((n >> d) << d) >= r:
            return n
        n += 1


def select_params(r: int, n: int) -> ParamChoice:
    _check_r(r)
    d = _exponent(n) if n >= 1 else 0
    choice = ParamChoice(d=d, m=n >> d if n >= 1 else 0)
    if d < 1 or choice.m < 1 or choice.n_used < r:
        raise DomainError(f"n={n} is too small for r={r}; smallest feasible n is {min_feasible_n(r)}")
    return choice


def shadow_edge_count(r: int, d: int, backend=None) -> int:
    """Edge count of the binary construction over Z_2^d (0 when 2^d < r)."""
    if (1 << d) < r:
        return 0
    return len(build_binary(r, d, backend=backend))


def build(name: str, r: int, *, n: int | None = None, m: int | None = None,
          d: int | None = None, requested_n: int | None = None,
          threads: int = 1, backend=None) -> tuple[Hypergraph, ConstructionMeta]:
    """Build a named construction and describe it."""
    if name == MOD_SUM:
        if r != 4:
            raise DomainError(f"mod-sum construction is 4-uniform, got r={r}")
        if n is None:
            raise DomainError("mod-sum construction needs n")
        h = build_mod_sum(n, threads, backend)
        meta = ConstructionMeta(MOD_SUM, groups.cyclic(n), 4, requested_n or n, n)
    elif name in (BINARY, PRODUCT):
        if d is None or (name == PRODUCT and m is None):
            raise DomainError(f"{name} construction needs " + ("d" if name == BINARY else "m and d"))
        m = 1 if name == BINARY else m
        h = build_product(r, m, d, threads, backend)
        g = groups.product(m, d)
        shadow = len(h) if g.kind == groups.BINARY else shadow_edge_count(r, d, backend)
        meta = ConstructionMeta(
            BINARY if g.kind == groups.BINARY else PRODUCT, g, r, requested_n or g.order, g.order, shadow)
    else:
        raise DomainError(f"unknown construction {name!r}")
    return h, meta


def build_auto(r: int, n: int, threads: int = 1, backend=None) -> tuple[Hypergraph, ConstructionMeta]:
    """Pick the construction and parameters for r-graphs on at most n vertices.

    r = 4 uses mod-sum on the largest even n' <= n; r > 4 uses the product
    construction with ``select_params``. There is no construction for r <= 3.
    """
    if r <= 3:
        raise DomainError(f"r={r} is unsupported: constructions exist for r >= 4 only")
    if r == 4:
        return build(MOD_SUM, 4, n=n - n % 2, requested_n=n, threads=threads, backend=backend)
    p = select_params(r, n)
    return build(PRODUCT, r, m=p.m, d=p.d, requested_n=n, threads=threads, backend=backend)
