"""The three vertex groups: Z_n, Z_2^d and Z_m + Z_2^d.

Elements are plain ints. An element of the product group with cyclic
part ``x`` and binary part ``y`` has index ``x * 2**d + y``; the cyclic
group is the product with ``d = 0`` and the binary group the product
with ``m = 1``, so one encoding covers all three and index 0 is always
the identity.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .errors import UsageError

__all__ = ["GroupSpec", "cyclic", "binary", "product", "add", "sum_elements"]

CYCLIC, BINARY, PRODUCT = "cyclic", "binary", "product"


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    m: int  # order of the cyclic factor (1 for binary)
    d: int  # dimension of the binary factor (0 for cyclic)

    def __post_init__(self):
        if self.kind not in (CYCLIC, BINARY, PRODUCT):
            raise UsageError(f"unknown group kind {self.kind!r}")
        if self.m < 1 or self.d < 0:
            raise UsageError(f"invalid group parameters m={self.m} d={self.d}")

    @property
    def order(self) -> int:
        return self.m << self.d

    def encode(self, x: int, y: int = 0) -> int:
        if not (0 <= x < self.m and 0 <= y < (1 << self.d)):
            raise UsageError(f"({x}, {y}) is not an element of {self.token}")
        return (x << self.d) | y

    def decode(self, index: int) -> tuple[int, int]:
        self.check(index)
        return index >> self.d, index & ((1 << self.d) - 1)

    def check(self, index: int) -> int:
        if not 0 <= index < self.order:
            raise UsageError(f"element index {index} out of range for {self.token}")
        return index

    @property
    def token(self) -> str:
        if self.kind == CYCLIC:
            return f"Z{self.m}"
        if self.kind == BINARY:
            return f"Z2^{self.d}"
        return f"Z{self.m}xZ2^{self.d}"

    @classmethod
    def parse(cls, token: str) -> GroupSpec:
        if mo := re.fullmatch(r"Z(\d+)xZ2\^(\d+)", token):
            return product(int(mo[1]), int(mo[2]))
        if mo := re.fullmatch(r"Z2\^(\d+)", token):
            return binary(int(mo[1]))
        if mo := re.fullmatch(r"Z(\d+)", token):
            return cyclic(int(mo[1]))
        raise UsageError(f"unrecognised group token {token!r}")

    def __str__(self):
        return self.token


def cyclic(n: int) -> GroupSpec:
    if n < 1:
        raise UsageError("cyclic group order must be positive")
    return GroupSpec(CYCLIC, n, 0)


def binary(d: int) -> GroupSpec:
    if d < 1:
        raise UsageError("binary group dimension must be positive")
    return GroupSpec(BINARY, 1, d)


def product(m: int, d: int) -> GroupSpec:
    """Z_m + Z_2^d; ``product(1, d)`` is the same value as ``binary(d)``."""
    if m < 1 or d < 1:
        raise UsageError("product group needs m >= 1 and d >= 1")
    if m == 1:
        return binary(d)
    return GroupSpec(PRODUCT, m, d)


def add(spec: GroupSpec, a: int, b: int) -> int:
    spec.check(a)
    spec.check(b)
    mask = (1 << spec.d) - 1
    x = ((a >> spec.d) + (b >> spec.d)) % spec.m
    return (x << spec.d) | ((a ^ b) & mask)


def sum_elements(spec: GroupSpec, elems: Iterable[int]) -> int:
    return reduce(lambda acc, e: add(spec, acc, e), elems, 0)
