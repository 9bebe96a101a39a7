"""Closed-form edge counts and density statistics, in exact arithmetic."""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import comb
from operator import xor

from .constructions import MOD_SUM, PRODUCT, ConstructionMeta
from .errors import BudgetExceeded, DomainError
from .hypergraph import Hypergraph, covered_subsets

__all__ = [
    "CountReport", "predicted_mod_sum_edges", "predicted_mod_sum_zero_triples",
    "linear_upper_bound", "zero_degree_subsets", "density_report",
    "count_zero_sum_subsets", "zero_sum_ratio",
]

ZERO_SUM_BUDGET = 20_000_000


def _even(n):
    if n < 4 or n % 2:
        raise DomainError(f"mod-sum counts are defined for even n >= 4, got n={n}")


def predicted_mod_sum_edges(n: int) -> int:
    """C(n,3)/4 - n(n-2)/8, which is an integer for every even n."""
    _even(n)
    value = Fraction(comb(n, 3), 4) - Fraction(n * (n - 2), 8)
    assert value.denominator == 1, value
    return value.numerator


def predicted_mod_sum_zero_triples(n: int) -> int:
    _even(n)
    return n * (n - 2) // 2


def linear_upper_bound(r: int, n: int) -> Fraction:
    """C(n, r-1)/r: each (r-1)-set lies in at most one edge of a linear r-graph."""
    return Fraction(comb(n, r - 1), r)


def zero_degree_subsets(h: Hypergraph, backend=None) -> int:
    """Number of (r-1)-subsets of vertices contained in no edge."""
    return comb(h.n, h.r - 1) - covered_subsets(h, h.r - 1, backend=backend)


@dataclass(frozen=True)
class CountReport:
    r: int
    n: int
    construction: str
    actual: int
    predicted: int | None
    upper_bound: Fraction
    ratio: Fraction
    zero_degree: int

    @property
    def matches(self) -> bool | None:
        return None if self.predicted is None else self.predicted == self.actual

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "construction": self.construction,
            "actual": self.actual,
            "predicted": self.predicted,
            "upper_bound": str(self.upper_bound),
            "ratio": str(self.ratio),
            "ratio_float": float(self.ratio),
            "zero_degree": self.zero_degree,
        }

    def render(self) -> str:
        fields = [f"r={self.r}", f"n={self.n}", f"construction={self.construction}",
                  f"actual={self.actual}"]
        if self.predicted is not None:
            fields.append(f"predicted={self.predicted}")
        fields += [f"bound={self.upper_bound}", f"ratio={self.ratio}",
                   f"ratio_float={float(self.ratio):.6f}", f"zero_degree={self.zero_degree}"]
        return " ".join(fields)


def _predicted(meta):
    if meta is None:
        return None
    if meta.name == MOD_SUM:
        return predicted_mod_sum_edges(meta.used_n)
    if meta.name == PRODUCT and meta.shadow_edges is not None:
        return meta.group.m ** (meta.r - 1) * meta.shadow_edges
    return None


def density_report(h: Hypergraph, meta: ConstructionMeta | None = None, backend=None) -> CountReport:
    bound = linear_upper_bound(h.r, h.n)
    ratio = Fraction(len(h)) / bound if bound else Fraction(0)
    return CountReport(
        r=h.r,
        n=h.n,
        construction=meta.name if meta else "external",
        actual=len(h),
        predicted=_predicted(meta),
        upper_bound=bound,
        ratio=ratio,
        zero_degree=zero_degree_subsets(h, backend),
    )


def count_zero_sum_subsets(d: int, k: int, budget: int | None = None) -> int:
    """Exact number of k-subsets of Z_2^d with zero sum, by enumeration."""
    if budget is None:
        budget = int(os.environ.get("STEINER_SPARSE_ZERO_SUM_BUDGET") or ZERO_SUM_BUDGET)
    work = comb(1 << d, k)
    if work > budget:
        raise BudgetExceeded(f"enumerating C({1 << d},{k}) = {work} subsets exceeds budget {budget}")
    return sum(1 for s in combinations(range(1 << d), k) if reduce(xor, s, 0) == 0)


def zero_sum_ratio(d: int, k: int, budget: int | None = None) -> Fraction:
    """Zero-sum k-subset count relative to the heuristic C(n, k)/n."""
    n = 1 << d
    return Fraction(count_zero_sum_subsets(d, k, budget) * n, comb(n, k))
