"""Checks for freeness from the families F_r(v, e).

F_r(v, e) is every r-graph with e edges on at most v vertices, so a host
hypergraph contains a member exactly when some e of its edges have a
union of at most v vertices. Certificates are tuples of edge positions,
ascending, listed in lexicographic order. Reports keep at most ``cap``
certificates but always count every violation.
"""
from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from . import kernels
from .errors import BudgetExceeded, UsageError
from .hypergraph import Hypergraph

__all__ = [
    "ForbiddenFamily", "ViolationReport", "check_linear", "check_sparse3",
    "check_forbidden", "naive_check", "check", "max_search", "default_families",
]

DEFAULT_CAP = 100
NAIVE_BUDGET = 5_000_000  # e-subsets of the edge list
ORACLE_BUDGET = 64  # candidate edges, i.e. C(n, r)


def _budget(env, default):
    value = os.environ.get(env)
    return int(value) if value else default


@dataclass(frozen=True, order=True)
class ForbiddenFamily:
    v: int
    e: int

    def validate(self, r: int) -> None:
        if self.e < 2 or self.v < r + 1 or self.v > self.e * r:
            raise UsageError(f"family {self} is not valid for r={r} (need e >= 2, r+1 <= v <= e*r)")

    @classmethod
    def parse(cls, text: str) -> ForbiddenFamily:
        try:
            v, e = (int(t) for t in text.split(","))
        except ValueError:
            raise UsageError(f"expected 'v,e', got {text!r}") from None
        return cls(v, e)

    def __str__(self):
        return f"F({self.v},{self.e})"


def default_families(r: int) -> list[ForbiddenFamily]:
    return [ForbiddenFamily(r + 1, 2), ForbiddenFamily(r + 2, 3)]


@dataclass
class ViolationReport:
    family: ForbiddenFamily
    certificates: list[tuple[int, ...]] = field(default_factory=list)
    total: int = 0
    cap: int = DEFAULT_CAP
    method: str = "pruned"

    @property
    def passed(self) -> bool:
        return self.total == 0

    def to_dict(self, h: Hypergraph | None = None) -> dict:
        out = {
            "family": {"v": self.family.v, "e": self.family.e},
            "method": self.method,
            "passed": self.passed,
            "violations": self.total,
            "certificates": [list(c) for c in self.certificates],
            "truncated": self.total > len(self.certificates),
        }
        if h is not None:
            out["certificate_edges"] = [[list(h.edge(p)) for p in c] for c in self.certificates]
        return out

    def render(self, h: Hypergraph | None = None) -> str:
        status = "pass" if self.passed else "FAIL"
        lines = [f"{self.family}: {status} ({self.total} violations, {self.method})"]
        for cert in self.certificates:
            line = "  edges " + " ".join(map(str, cert))
            if h is not None:
                line += ": " + " ".join("{" + " ".join(map(str, h.edge(p))) + "}" for p in cert)
            lines.append(line)
        if self.total > len(self.certificates):
            lines.append(f"  ... {self.total - len(self.certificates)} more not shown")
        return "\n".join(lines)


def _report(fam, certs, total, cap, method):
    return ViolationReport(fam, [tuple(int(x) for x in c) for c in certs[:cap]], int(total), cap, method)


def check_linear(h: Hypergraph, cap: int = DEFAULT_CAP, backend=None) -> ViolationReport:
    """F(r+1, 2): pairs of edges sharing an (r-1)-subset."""
    fam = ForbiddenFamily(h.r + 1, 2)
    pairs = kernels.shared_pairs(h.edges, h.n, h.r - 1, backend=backend) if len(h) > 1 else []
    return _report(fam, list(pairs[:cap]), len(pairs), cap, "pruned")


def check_sparse3(h: Hypergraph, cap: int = DEFAULT_CAP, threads: int = 1, backend=None) -> ViolationReport:
    """F(r+2, 3). Two edges can sit in such a triple only if they share
    r - 2 vertices, so only those pairs are extended."""
    fam = ForbiddenFamily(h.r + 2, 3)
    if h.r < 2:
        return check_forbidden(h, fam, cap)
    if len(h) < 3:
        return _report(fam, [], 0, cap, "pruned")
    pairs = kernels.shared_pairs(h.edges, h.n, h.r - 2, backend=backend)
    total, found = kernels.sparse3_triples(h.edges, h.n, pairs, cap, threads=threads, backend=backend)
    return _report(fam, list(found), total, cap, "pruned")


def check_forbidden(h: Hypergraph, fam: ForbiddenFamily, cap: int = DEFAULT_CAP) -> ViolationReport:
    """Depth-first search over ascending edge positions, cut as soon as the
    running union exceeds v vertices.

    With slack s = v - |U| < r, a further edge must meet the union U in at
    least t = r - s vertices, so it is found under some t-subset of U in
    the t-subset index; the full edge list is scanned only when that
    would mean more lookups than remaining edges.
    """
    fam.validate(h.r)
    r, rows = h.r, [frozenset(e) for e in h]
    indexes: dict[int, dict] = {}
    certs: list[tuple[int, ...]] = []
    total = 0

    def index(k):
        if k not in indexes:
            table = defaultdict(list)
            for pos, e in enumerate(h):
                for sub in combinations(e, k):
                    table[sub].append(pos)
            indexes[k] = table
        return indexes[k]

    def candidates(union, last):
        need = r - (fam.v - len(union))
        if need <= 0 or comb(len(union), need) > len(rows) - last:
            return range(last + 1, len(rows))
        table = index(need)
        found = set()
        for sub in combinations(sorted(union), need):
            found.update(table.get(sub, ()))
        return sorted(c for c in found if c > last)

    def extend(chosen, union):
        nonlocal total
        if len(chosen) == fam.e:
            total += 1
            if len(certs) < cap:
                certs.append(tuple(chosen))
            return
        for c in candidates(union, chosen[-1] if chosen else -1):
            grown = union | rows[c]
            if len(grown) <= fam.v:
                chosen.append(c)
                extend(chosen, grown)
                chosen.pop()

    extend([], frozenset())
    return ViolationReport(fam, certs, total, cap, "pruned")


def naive_check(h: Hypergraph, fam: ForbiddenFamily, cap: int = DEFAULT_CAP,
                budget: int | None = None) -> ViolationReport:
    """Unpruned reference: every e-subset of the edge list."""
    fam.validate(h.r)
    budget = budget if budget is not None else _budget("STEINER_SPARSE_NAIVE_BUDGET", NAIVE_BUDGET)
    work = comb(len(h), fam.e)
    if work > budget:
        raise BudgetExceeded(f"naive check needs {work} edge subsets, budget is {budget}")
    rows = [frozenset(e) for e in h]
    certs, total = [], 0
    for combo in combinations(range(len(rows)), fam.e):
        if len(frozenset().union(*(rows[i] for i in combo))) <= fam.v:
            total += 1
            if len(certs) < cap:
                certs.append(combo)
    return ViolationReport(fam, certs, total, cap, "naive")


def check(h: Hypergraph, fam: ForbiddenFamily, cap: int = DEFAULT_CAP, naive: bool = False,
          threads: int = 1, backend=None) -> ViolationReport:
    """Route a family to the fastest exact checker for it."""
    fam.validate(h.r)
    if naive:
        return naive_check(h, fam, cap)
    if fam == ForbiddenFamily(h.r + 1, 2):
        return check_linear(h, cap, backend)
    if fam == ForbiddenFamily(h.r + 2, 3):
        return check_sparse3(h, cap, threads, backend)
    return check_forbidden(h, fam, cap)


def _closes(rows, chosen, base, need, limit):
    # is there a need-subset of chosen whose union with base has <= limit vertices
    if len(base) > limit:
        return False
    if need == 0:
        return True
    for i in range(len(chosen) - need + 1):
        if _closes(rows, chosen[i + 1:], base | rows[chosen[i]], need - 1, limit):
            return True
    return False


def max_search(r: int, n: int, fams: list[ForbiddenFamily],
               budget: int | None = None) -> tuple[int, Hypergraph]:
    """Exact ex(n, fams) for tiny instances by branch and bound.

    Candidate edges are taken in lexicographic order; each node keeps the
    later candidates still compatible with the chosen set and is cut when
    even taking all of them cannot beat the best found.
    """
    for fam in fams:
        fam.validate(r)
    budget = budget if budget is not None else _budget("STEINER_SPARSE_ORACLE_BUDGET", ORACLE_BUDGET)
    if comb(n, r) > budget:
        raise BudgetExceeded(f"search over C({n},{r}) = {comb(n, r)} candidate edges exceeds budget {budget}")
    cands = list(combinations(range(n), r))
    rows = [frozenset(c) for c in cands]
    best: list[int] = []

    def compatible(chosen, c, x):
        # configurations avoiding c or x were ruled out earlier
        pair = rows[c] | rows[x]
        return not any(_closes(rows, chosen, pair, f.e - 2, f.v) for f in fams)

    def search(chosen, pool):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for i, c in enumerate(pool):
            if len(chosen) + len(pool) - i <= len(best):
                return
            rest = [x for x in pool[i + 1:] if compatible(chosen, c, x)]
            chosen.append(c)
            search(chosen, rest)
            chosen.pop()

    search([], list(range(len(cands))))
    return len(best), Hypergraph(r, n, [cands[i] for i in best])
