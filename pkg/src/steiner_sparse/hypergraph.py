"""r-uniform hypergraphs with a canonical edge order."""
from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import UsageError

__all__ = ["Hypergraph", "SubsetIndex", "degree", "build_index"]


class Hypergraph:
    """Immutable r-graph on vertices ``0..n-1``.

    Edges are held as an ``int32`` array of shape ``(E, r)``; every row is
    strictly increasing and rows are in lexicographic order, so two
    hypergraphs with the same edge set compare and serialise identically
    whatever order the edges were supplied in.
    """

    __slots__ = ("r", "n", "_edges")

    def __init__(self, r: int, n: int, edges: Iterable[Sequence[int]] = ()):
        if r < 1 or n < 0:
            raise UsageError(f"invalid hypergraph shape r={r} n={n}")
        rows = []
        for e in edges:
            row = sorted(int(v) for v in e)
            if len(row) != r or len(set(row)) != r:
                raise UsageError(f"edge {tuple(e)} does not have {r} distinct vertices")
            if row[0] < 0 or row[-1] >= n:
                raise UsageError(f"edge {tuple(e)} has a vertex outside [0, {n})")
            rows.append(row)
        arr = np.array(sorted(rows), dtype=np.int32).reshape(-1, r)
        if len(arr) > 1 and (np.diff(arr, axis=0) == 0).all(axis=1).any():
            raise UsageError("duplicate edge")
        self._init(r, n, arr)

    def _init(self, r, n, arr):
        self.r = r
        self.n = n
        arr.setflags(write=False)
        self._edges = arr

    @classmethod
    def from_canonical(cls, r: int, n: int, edges: np.ndarray) -> Hypergraph:
        """Wrap an array already in canonical form (kernel output); not re-checked."""
        h = cls.__new__(cls)
        h._init(r, n, np.ascontiguousarray(edges, dtype=np.int32).reshape(-1, r))
        return h

    @property
    def edges(self) -> np.ndarray:
        return self._edges

    def edge(self, pos: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self._edges[pos])

    def __len__(self):
        return len(self._edges)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for row in self._edges.tolist():
            yield tuple(row)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.r, self.n) == (other.r, other.n) and np.array_equal(self._edges, other._edges)

    def __hash__(self):
        return hash((self.r, self.n, self._edges.tobytes()))

    def __repr__(self):
        return f"Hypergraph(r={self.r}, n={self.n}, edges={len(self)})"

    def _check_subset(self, subset) -> tuple[int, ...]:
        s = tuple(sorted(int(v) for v in subset))
        if len(set(s)) != len(s) or len(s) > self.r:
            raise UsageError(f"{subset!r} is not a set of at most {self.r} vertices")
        if s and (s[0] < 0 or s[-1] >= self.n):
            raise UsageError(f"{subset!r} has a vertex outside [0, {self.n})")
        return s


def degree(h: Hypergraph, subset: Iterable[int]) -> int:
    """Number of edges containing ``subset``."""
    s = h._check_subset(subset)
    mask = np.ones(len(h), dtype=bool)
    for v in s:
        mask &= (h.edges == v).any(axis=1)
    return int(mask.sum())


class SubsetIndex:
    """Map from each k-subset lying in some edge to the positions of those edges."""

    def __init__(self, k: int, table: dict[tuple[int, ...], list[int]]):
        self.k = k
        self._table = table

    def __len__(self):
        return len(self._table)

    def __iter__(self):
        return iter(self._table)

    def items(self):
        return self._table.items()

    def edges_containing(self, subset) -> list[int]:
        return self._table.get(tuple(sorted(subset)), [])

    def degree(self, subset) -> int:
        return len(self.edges_containing(subset))


def build_index(h: Hypergraph, k: int) -> SubsetIndex:
    if not 1 <= k <= h.r:
        raise UsageError(f"subset size {k} outside [1, {h.r}]")
    table = defaultdict(list)
    for pos, e in enumerate(h):
        for sub in combinations(e, k):
            table[sub].append(pos)
    return SubsetIndex(k, dict(table))


def covered_subsets(h: Hypergraph, k: int, backend=None) -> int:
    """Number of distinct k-subsets of vertices with positive degree."""
    if len(h) == 0:
        return 0
    return kernels.count_covered(h.edges, h.n, k, backend=backend)
