"""Named graph generators: cliques, cycles, wheels, Kneser graphs, the
Mycielski construction and the 27-vertex Schläfli graph."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .core import Graph, GraphError, bits


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("K(n) needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << i) for i in range(n)], f"K({n})")


def empty(n: int) -> Graph:
    if n < 1:
        raise GraphError("Kbar(n) needs n >= 1")
    return Graph(n, [0] * n, f"Kbar({n})")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("C(n) needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C({n})")


def wheel(n: int) -> Graph:
    """C(n) plus a dominating hub (vertex n)."""
    if n < 3:
        raise GraphError("W(n) needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, edges, f"W({n})")


def kneser(n: int, r: int) -> Graph:
    """Vertices are the r-subsets of {0..n-1}; edges join disjoint subsets."""
    if not 1 <= r <= n:
        raise GraphError("KG(n,r) needs n >= r >= 1")
    subsets = [frozenset(c) for c in itertools.combinations(range(n), r)]
    m = len(subsets)
    rows = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if not subsets[i] & subsets[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(m, rows, f"KG({n},{r})")


def mycielski(g: Graph) -> Graph:
    """2n+1 vertices: originals 0..n-1, shadows n..2n-1, hub 2n.

    Each original edge i~j gains the two cross edges i~j' and i'~j, and
    every shadow is joined to the hub.
    """
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((n + u, v))
    edges.extend((n + i, 2 * n) for i in range(n))
    name = f"M({g.name})" if g.name else None
    return Graph.from_edges(2 * n + 1, edges, name)


@lru_cache(maxsize=1)
def schlafli() -> Graph:
    """The strongly regular (27,16,10,8) graph.

    Built as the complement of the intersection graph of the classical 27
    lines (double-six labels a_i, b_i, c_ij), then checked against the
    regularity parameters.
    """
    labels: list[tuple] = [("a", i) for i in range(6)] + [("b", i) for i in range(6)]
    labels += [("c", i, j) for i, j in itertools.combinations(range(6), 2)]
    assert len(labels) == 27

    def meets(x, y) -> bool:
        if x[0] == "a" and y[0] == "a":
            return False
        if x[0] == "b" and y[0] == "b":
            return False
        if {x[0], y[0]} == {"a", "b"}:
            return x[1] != y[1]
        if x[0] == "c" and y[0] == "c":
            return not ({x[1], x[2]} & {y[1], y[2]})
        # one of them is c_{ij}, the other a_k or b_k
        c = x if x[0] == "c" else y
        o = y if x[0] == "c" else x
        return o[1] in (c[1], c[2])

    rows = [0] * 27
    for i in range(27):
        for j in range(i + 1, 27):
            if not meets(labels[i], labels[j]):  # complement of the meeting relation
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    g = Graph(27, rows, "schlafli")
    _check_strongly_regular(g, 27, 16, 10, 8)
    return g


def _check_strongly_regular(g: Graph, n: int, k: int, lam: int, mu: int) -> None:
    if g.n != n or g.is_regular() != k:
        raise GraphError("strongly regular build failed the degree check")
    for u in range(n):
        for v in range(u + 1, n):
            common = (g.rows[u] & g.rows[v]).bit_count()
            want = lam if g.has_edge(u, v) else mu
            if common != want:
                raise GraphError(f"strongly regular build failed at pair ({u},{v})")


GENERATORS = {
    "K": (complete, 1),
    "Kbar": (empty, 1),
    "C": (cycle, 1),
    "W": (wheel, 1),
    "KG": (kneser, 2),
}


def make_named(name: str, *params: int) -> Graph:
    """Build a generator by name; `schlafli` takes no parameters."""
    if name == "schlafli":
        if params:
            raise GraphError("schlafli takes no parameters")
        return schlafli()
    if name not in GENERATORS:
        raise GraphError(f"unknown generator {name!r}")
    fn, arity = GENERATORS[name]
    if len(params) != arity:
        raise GraphError(f"{name} takes {arity} parameter(s)")
    return fn(*params)
