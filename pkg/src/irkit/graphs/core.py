"""Immutable simple undirected graphs over dense bitset adjacency rows.

Rows are Python ints used as bitmasks, so the same representation covers
both the fast <=64-vertex case and larger graphs (bigints are multi-word
for free).  All operations are pure; Graph values can be shared freely.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Optional

# Product sizes beyond this raise instead of allocating.
DEFAULT_SIZE_LIMIT = 10**6


class GraphError(ValueError):
    pass


class Graph:
    """A simple undirected graph with vertices 0..n-1."""

    __slots__ = ("n", "rows", "name")

    def __init__(self, n: int, rows: Iterable[int], name: Optional[str] = None):
        if n < 1:
            raise GraphError("graphs here have at least one vertex")
        rows = tuple(rows)
        if len(rows) != n:
            raise GraphError("row count != n")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full:
                raise GraphError("adjacency row has bits beyond n")
            if r >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if (rows[i] >> j & 1) != (rows[j] >> i & 1):
                    raise GraphError(f"asymmetric adjacency at ({i},{j})")
        self.n = n
        self.rows = rows
        self.name = name

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]], name: Optional[str] = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError("self-loop")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError("edge endpoint out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, rows, name)

    # -- basic queries --------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.rows[u] >> (u + 1) << (u + 1)
            while m:
                lsb = m & -m
                yield (u, lsb.bit_length() - 1)
                m ^= lsb

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def is_complete(self) -> bool:
        return self.num_edges() == self.n * (self.n - 1) // 2

    def is_empty(self) -> bool:
        return all(r == 0 for r in self.rows)

    def is_regular(self) -> Optional[int]:
        degs = {self.degree(v) for v in range(self.n)}
        return degs.pop() if len(degs) == 1 else None

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.n)))

    # -- derived graphs --------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = [full & ~r & ~(1 << i) for i, r in enumerate(self.rows)]
        name = None
        if self.name:
            name = f"~({self.name})" if len(self.name) > 1 else f"~{self.name}"
        return Graph(self.n, rows, name)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for i, v in enumerate(vs):
            for w in bits(self.rows[v]):
                if w in index:
                    rows[i] |= 1 << index[w]
        return Graph(len(vs), rows)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"({u},{v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def relabel(self, perm: list[int]) -> "Graph":
        """New graph whose vertex perm[i] plays the role of old vertex i."""
        rows = [0] * self.n
        for u in range(self.n):
            for v in bits(self.rows[u]):
                rows[perm[u]] |= 1 << perm[v]
        return Graph(self.n, rows)

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            frontier = 1 << s
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
            comps.append(bits(comp))
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_bipartite(self) -> bool:
        return bipartition(self) is not None

    def odd_girth(self) -> Optional[int]:
        """Length of a shortest odd cycle, or None for bipartite graphs."""
        best = None
        for s in range(self.n):
            dist = {s: 0}
            queue = [s]
            for v in queue:
                for w in bits(self.rows[v]):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        queue.append(w)
                    elif dist[w] == dist[v]:
                        cand = 2 * dist[v] + 1
                        if best is None or cand < best:
                            best = cand
        return best

    # -- identity ---------------------------------------------------------

    def adjacency_key(self) -> bytes:
        """Labeled identity (not canonical): the packed upper triangle."""
        bits_ = []
        for j in range(1, self.n):
            for i in range(j):
                bits_.append(self.rows[i] >> j & 1)
        out = bytearray([self.n & 0xFF, self.n >> 8])
        acc = 0
        for k, b in enumerate(bits_):
            acc |= b << (k % 8)
            if k % 8 == 7:
                out.append(acc)
                acc = 0
        if len(bits_) % 8:
            out.append(acc)
        return bytes(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        label = self.name or f"{self.n}v"
        return f"Graph({label}, n={self.n}, m={self.num_edges()})"


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return out


def bipartition(g: Graph) -> Optional[tuple[int, int]]:
    """Two color-class masks if g is bipartite, else None."""
    color = {}
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        queue = [s]
        for v in queue:
            for w in bits(g.rows[v]):
                if w not in color:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    a = sum(1 << v for v, c in color.items() if c == 0)
    b = sum(1 << v for v, c in color.items() if c == 1)
    return a, b


def _product(g: Graph, h: Graph, adjacent, name: str, limit: int) -> Graph:
    """Generic graph product; vertex (u,v) gets index u*h.n + v (row-major)."""
    n = g.n * h.n
    if n > limit:
        raise GraphError(f"product would have {n} vertices (limit {limit})")
    rows = [0] * n
    for u1, v1 in itertools.product(range(g.n), range(h.n)):
        i = u1 * h.n + v1
        for u2, v2 in itertools.product(range(g.n), range(h.n)):
            j = u2 * h.n + v2
            if i != j and adjacent(g, h, u1, v1, u2, v2):
                rows[i] |= 1 << j
    return Graph(n, rows, name)


def _eq_or_adj(g: Graph, u1: int, u2: int) -> bool:
    return u1 == u2 or g.has_edge(u1, u2)


def strong_product(g: Graph, h: Graph, limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    """Vertices adjacent iff every coordinate is equal or adjacent."""
    name = f"({g.name}*{h.name})" if g.name and h.name else None
    return _product(
        g, h,
        lambda G, H, u1, v1, u2, v2: _eq_or_adj(G, u1, u2) and _eq_or_adj(H, v1, v2),
        name, limit,
    )


def or_product(g: Graph, h: Graph, limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    """Vertices adjacent iff some coordinate is adjacent."""
    name = f"({g.name}|{h.name})" if g.name and h.name else None
    return _product(
        g, h,
        lambda G, H, u1, v1, u2, v2: G.has_edge(u1, u2) or H.has_edge(v1, v2),
        name, limit,
    )


def tensor_product(g: Graph, h: Graph, limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    """Vertices adjacent iff both coordinates are adjacent."""
    name = f"({g.name}x{h.name})" if g.name and h.name else None
    return _product(
        g, h,
        lambda G, H, u1, v1, u2, v2: G.has_edge(u1, u2) and H.has_edge(v1, v2),
        name, limit,
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    name = f"({g.name}+{h.name})" if g.name and h.name else None
    return Graph(g.n + h.n, rows, name)


def strong_power(g: Graph, k: int, limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    if k < 1:
        raise GraphError("power exponent must be >= 1")
    if g.n**k > limit:
        raise GraphError(f"power would have {g.n ** k} vertices (limit {limit})")
    out = g
    for _ in range(k - 1):
        out = strong_product(out, g, limit)
    if g.name:
        out = Graph(out.n, out.rows, f"({g.name})^{k}" if k > 1 else g.name)
    return out


def or_power(g: Graph, k: int, limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    if k < 1:
        raise GraphError("power exponent must be >= 1")
    if g.n**k > limit:
        raise GraphError(f"power would have {g.n ** k} vertices (limit {limit})")
    out = g
    for _ in range(k - 1):
        out = or_product(out, g, limit)
    return out


def power_vertex(bases: list[int], sizes: list[int]) -> int:
    """Row-major index of a product vertex given per-coordinate indices."""
    idx = 0
    for b, s in zip(bases, sizes):
        idx = idx * s + b
    return idx


def power_coords(idx: int, sizes: list[int]) -> list[int]:
    """Inverse of power_vertex."""
    out = []
    for s in reversed(sizes):
        out.append(idx % s)
        idx //= s
    return list(reversed(out))
