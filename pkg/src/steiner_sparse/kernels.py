"""Backend selection for the hot loops.

The compiled extension is used when it imports; setting
``STEINER_SPARSE_PURE=1`` forces the pure-Python kernels. Every entry
point also takes ``backend=`` so tests and benchmarks can pin one.
Instances the compiled code cannot represent (uniformity above its
fixed bound, subset ranks overflowing int64) route to Python.
"""
from __future__ import annotations

import os
from math import comb
from types import ModuleType

import numpy as np

from . import _pykernels

try:
    if os.environ.get("STEINER_SPARSE_PURE"):
        raise ImportError("pure-Python kernels forced by environment")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_RANK_LIMIT = 1 << 62


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def _pick(backend: str | None, r: int, n: int, k: int) -> ModuleType:
    name = backend or BACKEND
    if name == "python":
        return _pykernels
    if name != "cython":
        raise ValueError(f"unknown backend {name!r}")
    if _ckernels is None:
        raise RuntimeError("compiled kernels are not built")
    if r > _ckernels.MAX_UNIFORMITY or comb(max(n, 1), k) >= _RANK_LIMIT:
        return _pykernels
    return _ckernels


def _rows(edges) -> np.ndarray:
    return np.ascontiguousarray(edges, dtype=np.int32)


def zero_sum_edges(r, m, d, target, shadow, threads=1, backend=None) -> np.ndarray:
    mod = _pick(backend, r, 0, 0)
    return mod.zero_sum_edges(r, m, d, target, bool(shadow), threads)


def shared_pairs(edges, n, k, backend=None) -> np.ndarray:
    edges = _rows(edges)
    r = edges.shape[1]
    return _pick(backend, r, n, r).shared_pairs(edges, n, k)


def sparse3_triples(edges, n, pairs, cap, threads=1, backend=None):
    edges = _rows(edges)
    r = edges.shape[1]
    pairs = np.ascontiguousarray(pairs, dtype=np.int64).reshape(-1, 2)
    return _pick(backend, r, n, r).sparse3_triples(edges, n, pairs, cap, threads)


def count_covered(edges, n, k, backend=None) -> int:
    edges = _rows(edges)
    r = edges.shape[1]
    return int(_pick(backend, r, n, r).count_covered(edges, n, k))
