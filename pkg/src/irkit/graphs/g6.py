"""graph6 encoding and decoding (the de-facto ASCII graph format).

Bits of the upper triangle are taken column by column: (0,1), (0,2), (1,2),
(0,3), ...; each 6-bit group maps to one printable character 63..126.
"""

from __future__ import annotations

from .core import Graph, GraphError


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise GraphError("graph too large for this graph6 writer")


def to_graph6(g: Graph) -> str:
    bit_list = []
    for j in range(1, g.n):
        for i in range(j):
            bit_list.append(g.rows[i] >> j & 1)
    while len(bit_list) % 6:
        bit_list.append(0)
    out = bytearray(_encode_n(g.n))
    for k in range(0, len(bit_list), 6):
        val = 0
        for b in bit_list[k:k + 6]:
            val = val << 1 | b
        out.append(val + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    data = text.strip().encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise GraphError("graph6 characters must be in 63..126")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise GraphError("unsupported or truncated graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n == 0:
        raise GraphError("graphs here have at least one vertex")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} chars, expected {need}")
    bit_list = []
    for c in body:
        v = c - 63
        for shift in range(5, -1, -1):
            bit_list.append(v >> shift & 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bit_list[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if any(bit_list[n * (n - 1) // 2:]):
        raise GraphError("graph6 padding bits must be zero")
    return Graph(n, rows)
