"""The ``steiner-sparse v1`` edge-list file.

::

    # steiner-sparse v1
    # r=4 n=6 construction=mod-sum group=Z6
    0 1 2 4
    1 3 4 5

Body lines are ascending vertex indices, sorted lexicographically, no
trailing whitespace, every line newline-terminated. Files written here
read back to an equal hypergraph and re-serialise byte-identically.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import constructions, groups
from .constructions import ConstructionMeta
from .errors import FormatError, UsageError
from .groups import GroupSpec
from .hypergraph import Hypergraph

MAGIC = "# steiner-sparse v1"
EXTERNAL = "external"
_HEADER = re.compile(r"# r=(\d+) n=(\d+) construction=(\S+) group=(\S+)")
_BODY = re.compile(r"\d+( \d+)*")


@dataclass(frozen=True)
class Header:
    r: int
    n: int
    construction: str = EXTERNAL
    group: GroupSpec | None = None

    def line(self) -> str:
        token = self.group.token if self.group else "none"
        return f"# r={self.r} n={self.n} construction={self.construction} group={token}"


def header_for(h: Hypergraph, meta: ConstructionMeta | Header | None = None) -> Header:
    if isinstance(meta, Header):
        return meta
    if meta is None:
        return Header(h.r, h.n)
    return Header(h.r, h.n, meta.name, meta.group)


def dumps(h: Hypergraph, meta: ConstructionMeta | Header | None = None) -> str:
    parts = [MAGIC, header_for(h, meta).line()]
    parts.extend(" ".join(map(str, row)) for row in h.edges.tolist())
    return "\n".join(parts) + "\n"


def _parse_header(line: str) -> Header:
    mo = _HEADER.fullmatch(line)
    if not mo:
        raise FormatError("expected '# r=<r> n=<n> construction=<name> group=<token>'", 2)
    r, n, name, token = int(mo[1]), int(mo[2]), mo[3], mo[4]
    if r < 1:
        raise FormatError(f"uniformity must be positive, got r={r}", 2)
    if name not in (*constructions.NAMES, EXTERNAL):
        raise FormatError(f"unknown construction {name!r}", 2)
    if token == "none":
        if name != EXTERNAL:
            raise FormatError(f"construction {name} needs a group", 2)
        return Header(r, n)
    try:
        group = GroupSpec.parse(token)
    except UsageError as exc:
        raise FormatError(str(exc), 2) from None
    expected = {constructions.MOD_SUM: groups.CYCLIC, constructions.BINARY: groups.BINARY,
                constructions.PRODUCT: groups.PRODUCT}.get(name)
    if expected is not None and group.kind != expected:
        raise FormatError(f"group {token} does not fit construction {name}", 2)
    if group.order != n:
        raise FormatError(f"group {token} has order {group.order}, header says n={n}", 2)
    return Header(r, n, name, group)


def loads(text: str) -> tuple[Hypergraph, Header]:
    if not text.endswith("\n"):
        raise FormatError("file must end with a newline", text.count("\n") + 1)
    lines = text[:-1].split("\n")
    if lines[0] != MAGIC:
        raise FormatError(f"expected {MAGIC!r}", 1)
    if len(lines) < 2:
        raise FormatError("missing header line", 2)
    header = _parse_header(lines[1])
    rows = []
    prev = None
    for lineno, line in enumerate(lines[2:], start=3):
        if not _BODY.fullmatch(line):
            raise FormatError(f"expected space-separated vertex indices, got {line!r}", lineno)
        row = [int(t) for t in line.split(" ")]
        if len(row) != header.r:
            raise FormatError(f"edge has {len(row)} vertices, expected r={header.r}", lineno)
        if any(a >= b for a, b in zip(row, row[1:])):
            raise FormatError("vertices must be strictly increasing", lineno)
        if row[-1] >= header.n:
            raise FormatError(f"vertex {row[-1]} out of range for n={header.n}", lineno)
        if prev is not None and row <= prev:
            raise FormatError("edges must be in strictly increasing lexicographic order", lineno)
        rows.append(row)
        prev = row
    edges = np.array(rows, dtype=np.int32).reshape(-1, header.r)
    return Hypergraph.from_canonical(header.r, header.n, edges), header


def write(path, h: Hypergraph, meta: ConstructionMeta | Header | None = None) -> None:
    Path(path).write_text(dumps(h, meta))


def read(path) -> tuple[Hypergraph, Header]:
    return loads(Path(path).read_text())


def meta_from_header(header: Header) -> ConstructionMeta | None:
    """Rebuild construction metadata, recounting the shadow graph for products."""
    if header.construction == EXTERNAL or header.group is None:
        return None
    g = header.group
    shadow = None
    if header.construction == constructions.PRODUCT and header.r > 4:
        shadow = constructions.shadow_edge_count(header.r, g.d)
    return ConstructionMeta(header.construction, g, header.r, header.n, header.n, shadow)
