"""Bit-exact graph6 codec plus a plain edge-list text format.

graph6 packs the upper triangle of the adjacency matrix column by column
(pair (i, j), i < j, ordered by j then i), six bits per printable byte at
offset 63.  Orders below 63 use a single order byte; 63..258047 use the
'~' escape with three bytes.  The 8-byte '~~' form is deliberately
rejected: this toolkit works at desk scale.
"""

from __future__ import annotations

from typing import List, Tuple

from .graph import Graph, build_graph

_MAX_LONG_ORDER = 258047


class Graph6Error(ValueError):
    """graph6 parse failure; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def encode_graph6(graph: Graph) -> str:
    n = graph.n
    if n < 0:
        raise ValueError("negative order")
    if n >= _MAX_LONG_ORDER + 1:
        raise ValueError(
            f"order {n} needs the 8-byte graph6 form, which is not supported"
        )
    out: List[int] = []
    if n < 63:
        out.append(n + 63)
    else:
        out.append(126)
        out.append(((n >> 12) & 63) + 63)
        out.append(((n >> 6) & 63) + 63)
        out.append((n & 63) + 63)
    bits = 0
    nbits = 0
    for j in range(1, n):
        col = graph.adj_bits[j]
        for i in range(j):
            bits = (bits << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = 0
                nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    return "".join(chr(b) for b in out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    data = s.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"non-printable graph6 byte {b!r}", off)
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte order form is not supported", 0)
        if len(data) < 4:
            raise Graph6Error("truncated extended order", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n < 63:
            raise Graph6Error("extended order used for n < 63", 0)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(data) - pos}",
            pos,
        )
    edges: List[Tuple[int, int]] = []
    bit_index = 0
    i, j = 0, 1
    for k in range(pos, len(data)):
        chunk = data[k] - 63
        for shift in range(5, -1, -1):
            if bit_index >= nbits:
                if (chunk >> shift) & 1:
                    raise Graph6Error("nonzero padding bits", k)
                continue
            if (chunk >> shift) & 1:
                edges.append((i, j))
            bit_index += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return build_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: one "u v" per line, 0-based; '#' comments and
    blank lines ignored.  The order is max endpoint + 1 (trailing isolated
    vertices are not representable; use graph6 for those)."""
    edges: List[Tuple[int, int]] = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, w = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer endpoint") from exc
        if u < 0 or w < 0:
            raise ValueError(f"line {lineno}: negative endpoint")
        edges.append((u, w))
        top = max(top, u, w)
    return build_graph(top + 1, edges)


def format_edge_list(graph: Graph) -> str:
    lines = [f"# n={graph.n} m={graph.m}"]
    lines.extend(f"{u} {w}" for u, w in graph.edges())
    return "\n".join(lines) + "\n"
